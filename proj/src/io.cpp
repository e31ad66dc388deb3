#include "rhoc/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "rhoc/error.hpp"

namespace rhoc::io {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, where + ": " + what);
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorCode::UnknownField, where + ": unexpected key \"" + key + "\"");
  }
  for (const char* a : allowed) {
    if (!j.contains(a)) throw Error(ErrorCode::UnknownField, where + ": missing key \"" + std::string(a) + "\"");
  }
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    malformed(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_array()) malformed(where + "." + key, "expected an array");
  return a;
}

Vector vector_from_json(const Json& j, const Field& field, std::size_t dim, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array of scalars");
  if (j.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                where + ": length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
  }
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], field, where + "[" + std::to_string(i) + "]"));
  return v;
}

Field resolve_field(const Json& j, const std::optional<Field>& override_field) {
  return override_field ? *override_field : field_from_json(j.at("field"));
}

}  // namespace

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("fp")) {
    const Json& p = j.at("fp");
    if (p.is_number_unsigned() || (p.is_number_integer() && p.get<std::int64_t>() > 0)) {
      return Field::prime(p.get<std::uint64_t>());
    }
    if (p.is_string()) {
      try {
        return Field::prime(std::stoull(p.get<std::string>()));
      } catch (const std::logic_error&) {
      }
    }
    throw Error(ErrorCode::BadPrime, "field.fp: " + p.dump() + " is not a prime");
  }
  throw Error(ErrorCode::UnknownField, "field: expected \"q\" or {\"fp\": p}, got " + j.dump());
}

Scalar scalar_from_json(const Json& j, const Field& field, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? field.from_integer(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                    : field.from_int(j.get<std::int64_t>());
    }
    if (j.is_string()) return field.parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::BadScalar, where + ": " + e.what());
  }
  throw Error(ErrorCode::BadScalar, where + ": " + j.dump() + " is not an exact scalar");
}

SubspaceFamily family_from_json(const Json& j, const std::optional<Field>& override_field) {
  check_keys(j, {"field", "ambient_dim", "subspaces"}, "family");
  Field field = resolve_field(j, override_field);
  std::size_t dim = count_from_json(j.at("ambient_dim"), "ambient_dim");
  const Json& subspaces = array_at(j, "subspaces", "family");
  SubspaceFamily family(field, dim);
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const std::string where = "subspaces[" + std::to_string(i) + "]";
    if (!subspaces[i].is_array()) malformed(where, "expected a list of generating rows");
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < subspaces[i].size(); ++r) {
      rows.push_back(vector_from_json(subspaces[i][r], field, dim, where + "[" + std::to_string(r) + "]"));
    }
    Subspace s = Subspace::span_of(Matrix::from_rows(field, dim, rows));
    if (s.is_zero()) throw Error(ErrorCode::ZeroSubspace, where + " spans the zero subspace");
    family.push_back(std::move(s));
  }
  return family;
}

Graph graph_from_json(const Json& j) {
  check_keys(j, {"n", "edges"}, "graph");
  std::size_t n = count_from_json(j.at("n"), "n");
  const Json& edges = array_at(j, "edges", "graph");
  std::vector<Edge> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) malformed(where, "expected a pair [u, v]");
    list.emplace_back(count_from_json(edges[i][0], where + "[0]"), count_from_json(edges[i][1], where + "[1]"));
  }
  try {
    return Graph(n, std::move(list));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("graph: ") + e.what());
  }
}

R2Instance r2_from_json(const Json& j, const std::optional<Field>& override_field) {
  check_keys(j, {"field", "ambient_dim", "rows"}, "r2 instance");
  R2Instance inst;
  inst.field = resolve_field(j, override_field);
  inst.ambient_dim = count_from_json(j.at("ambient_dim"), "ambient_dim");
  const Json& rows = array_at(j, "rows", "r2 instance");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    check_keys(rows[i], {"u", "v"}, where);
    inst.rows.push_back({vector_from_json(rows[i].at("u"), inst.field, inst.ambient_dim, where + ".u"),
                         vector_from_json(rows[i].at("v"), inst.field, inst.ambient_dim, where + ".v")});
  }
  return inst;
}

RkInstance rk_from_json(const Json& j, const std::optional<Field>& override_field) {
  check_keys(j, {"field", "ambient_dim", "k", "tensors"}, "rk instance");
  RkInstance inst;
  inst.field = resolve_field(j, override_field);
  inst.ambient_dim = count_from_json(j.at("ambient_dim"), "ambient_dim");
  inst.order = count_from_json(j.at("k"), "k");
  const Json& tensors = array_at(j, "tensors", "rk instance");
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    const std::string where = "tensors[" + std::to_string(i) + "]";
    if (!tensors[i].is_array() || tensors[i].size() != inst.order) {
      malformed(where, "expected " + std::to_string(inst.order) + " factor vectors");
    }
    std::vector<Vector> factors;
    for (std::size_t f = 0; f < tensors[i].size(); ++f) {
      factors.push_back(vector_from_json(tensors[i][f], inst.field, inst.ambient_dim, where + "[" + std::to_string(f) + "]"));
    }
    inst.tensors.push_back(std::move(factors));
  }
  validate(inst);
  return inst;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
}

SubspaceFamily load_family(const std::string& path, const std::optional<Field>& override_field) {
  return family_from_json(read_json_file(path), override_field);
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

R2Instance load_r2(const std::string& path, const std::optional<Field>& override_field) {
  return r2_from_json(read_json_file(path), override_field);
}

RkInstance load_rk(const std::string& path, const std::optional<Field>& override_field) {
  return rk_from_json(read_json_file(path), override_field);
}

Json to_json(const Partition& pi) {
  Json out = Json::array();
  for (const auto& block : pi.blocks()) out.push_back(block);
  return out;
}

Json to_json(const RhoResult& result) {
  Json out;
  out["value"] = result.value.get_str();
  out["partition"] = to_json(result.partition);
  return out;
}

Json to_json(const RigidityReport& report) {
  Json out;
  out["dimension"] = report.dimension;
  out["rank"] = report.rank;
  out["required"] = report.required;
  out["rigid"] = report.rigid;
  out["dof"] = report.dof;
  out["method"] = std::string(to_string(report.method));
  return out;
}

Json to_json(const SymbolicRank& rank) {
  Json out;
  out["rank"] = rank.rank;
  out["dropped_rows"] = rank.dropped;
  return out;
}

}  // namespace rhoc::io
