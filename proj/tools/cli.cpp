#include "cli.hpp"

#include <CLI11.hpp>

#include "rhoc/error.hpp"
#include "rhoc/io.hpp"
#include "rhoc/rho_engine.hpp"
#include "rhoc/rigidity.hpp"
#include "rhoc/symbolic_rank.hpp"
#include "rhoc/verify.hpp"

namespace rhoc::cli {

namespace {

using io::Json;

std::optional<Field> field_override(const RunConfig& config) {
  if (!config.field) return std::nullopt;
  std::string text = *config.field;
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) text = text.substr(3);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
    throw Error(ErrorCode::UnknownField, "--field: expected q, fp:<p> or <p>, got '" + *config.field + "'");
  }
  return Field::prime(std::stoull(text));
}

Rational parse_c(const std::string& text) {
  try {
    return Field::rationals().parse(text).as_rational();
  } catch (const Error& e) {
    throw Error(ErrorCode::BadScalar, std::string("--c: ") + e.what());
  }
}

void emit(const Json& report, const RunConfig& config, std::ostream& out) {
  if (config.output == "json") {
    out << report.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

int run_verify(const RunConfig& config, std::ostream& out) {
  bool all_passed = true;
  Json suites = Json::array();
  auto results = verify::run_suite(config.suite, config.seed);
  for (const auto& r : results) {
    if (suites.empty() || suites.back()["name"] != r.suite) {
      suites.push_back(Json{{"name", r.suite}, {"passed", true}, {"checks", Json::array()}});
    }
    Json& s = suites.back();
    s["checks"].push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) s["passed"] = false;
    all_passed = all_passed && r.passed;
  }
  if (config.output == "json") {
    Json report{{"seed", config.seed}, {"passed", all_passed}, {"suites", suites}};
    out << report.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << ": " << r.detail << "\n";
      passed += r.passed;
    }
    for (const auto& s : suites) out << "suite " << s["name"].get<std::string>() << ": " << (s["passed"].get<bool>() ? "pass" : "fail") << "\n";
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return all_passed ? 0 : 2;
}

int run_rand_rank(const RunConfig& config, std::ostream& out) {
  Json j = io::read_json_file(config.input);
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "expected a JSON object");
  auto override_field = field_override(config);
  SymbolicMatrix matrix;
  if (j.contains("edges")) {
    matrix = rigidity_symbolic(io::graph_from_json(j), config.dim);
  } else if (j.contains("k")) {
    matrix = rk_symbolic(io::rk_from_json(j, override_field));
  } else if (j.contains("rows")) {
    matrix = r2_symbolic(io::r2_from_json(j, override_field));
  } else {
    throw Error(ErrorCode::UnknownField, "rand-rank input must be a graph, an R_2 or an R_k instance");
  }
  std::size_t r = randomized_rank(matrix, Field::prime(config.prime), config.trials, config.seed);
  emit(Json{{"rank", r}, {"trials", config.trials}, {"prime", config.prime}}, config, out);
  return 0;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.output != "json" && config.output != "text") {
    throw Error(ErrorCode::UnknownField, "--output must be json or text");
  }
  if (config.command == "verify") return run_verify(config, out);
  if (config.command == "rand-rank") return run_rand_rank(config, out);
  if (config.command == "rho") {
    Rational c = parse_c(config.c);
    emit(io::to_json(rho(io::load_family(config.input, field_override(config)), c, config.backend)), config, out);
    return 0;
  }
  if (config.command == "pit-r2") {
    emit(io::to_json(r2_rank(io::load_r2(config.input, field_override(config)), config.backend)), config, out);
    return 0;
  }
  if (config.command == "pit-rk") {
    emit(io::to_json(rk_rank(io::load_rk(config.input, field_override(config)), config.backend)), config, out);
    return 0;
  }
  if (config.command == "rigidity") {
    RigidityOptions options;
    options.force_randomized = config.force_randomized;
    options.prime = config.prime;
    options.trials = config.trials;
    options.seed = config.seed;
    options.backend = config.backend;
    emit(io::to_json(rigidity_report(io::load_graph(config.input), config.dim, options)), config, out);
    return 0;
  }
  throw Error(ErrorCode::Unsupported, "unknown command '" + config.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: MalformedInput: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 2;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partition functions of subspace families, symbolic ranks and 2-D rigidity"};
  app.require_subcommand(1);
  RunConfig config;
  std::string backend = "auto";

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", config.input, "JSON instance file")->required(); };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "json or text")->capture_default_str();
  };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", config.field, "override the field: q, fp:<p> or <p>"); };
  auto add_sfm = [&](CLI::App* sub) {
    sub->add_option("--sfm", backend, "submodular minimizer: exhaustive, mnp or auto")->capture_default_str();
  };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "master seed")->capture_default_str();
    sub->add_option("--trials", config.trials, "random evaluation points")->capture_default_str();
    sub->add_option("--prime", config.prime, "prime modulus for random evaluation")->capture_default_str();
  };

  auto* rho_cmd = app.add_subcommand("rho", "rho_c of a subspace family and its minimal partition");
  add_input(rho_cmd);
  rho_cmd->add_option("--c", config.c, "rational c as a or a/b")->capture_default_str();
  add_field(rho_cmd);
  add_sfm(rho_cmd);
  add_output(rho_cmd);

  auto* r2_cmd = app.add_subcommand("pit-r2", "generic rank of an R_2 symbolic matrix");
  auto* rk_cmd = app.add_subcommand("pit-rk", "generic rank of an R_k symbolic matrix");
  for (auto* sub : {r2_cmd, rk_cmd}) {
    add_input(sub);
    add_field(sub);
    add_sfm(sub);
    add_output(sub);
  }

  auto* rig_cmd = app.add_subcommand("rigidity", "generic rigidity report of a graph");
  add_input(rig_cmd);
  rig_cmd->add_option("--dim", config.dim, "dimension t")->capture_default_str();
  rig_cmd->add_flag("--randomized", config.force_randomized, "use random evaluation even for t = 2");
  add_random(rig_cmd);
  add_sfm(rig_cmd);
  add_output(rig_cmd);

  auto* rand_cmd = app.add_subcommand("rand-rank", "randomized rank of a graph, R_2 or R_k instance");
  add_input(rand_cmd);
  rand_cmd->add_option("--dim", config.dim, "dimension t for graph inputs")->capture_default_str();
  add_field(rand_cmd);
  add_random(rand_cmd);
  add_output(rand_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", config.suite, "suite name or all")->capture_default_str();
  verify_cmd->add_option("--seed", config.seed, "master seed")->capture_default_str();
  add_output(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  config.command = app.get_subcommands().front()->get_name();
  try {
    config.backend = parse_backend(backend);
  } catch (const Error& e) {
    err << "error: --sfm: " << e.what() << "\n";
    return 1;
  }
  return run(config, out, err);
}

}  // namespace rhoc::cli
