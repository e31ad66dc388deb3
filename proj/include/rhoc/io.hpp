#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rhoc/partitions.hpp"
#include "rhoc/rigidity.hpp"
#include "rhoc/symbolic_rank.hpp"

namespace rhoc::io {

using Json = nlohmann::ordered_json;

// "q" or {"fp": p}. Throws UnknownField / BadPrime.
Field field_from_json(const Json& j);
// Integers as JSON numbers or decimal strings, fractions as "a/b".
Scalar scalar_from_json(const Json& j, const Field& field, const std::string& where);

// Every loader validates all invariants of its target type. A field override
// replaces the instance's own "field" entry. Errors name the offending key or
// index path, e.g. "subspaces[2]".
SubspaceFamily family_from_json(const Json& j, const std::optional<Field>& override_field = std::nullopt);
Graph graph_from_json(const Json& j);
R2Instance r2_from_json(const Json& j, const std::optional<Field>& override_field = std::nullopt);
RkInstance rk_from_json(const Json& j, const std::optional<Field>& override_field = std::nullopt);

// Reads and parses a JSON file; throws Error(MalformedInput) on I/O or syntax
// errors.
Json read_json_file(const std::string& path);

SubspaceFamily load_family(const std::string& path, const std::optional<Field>& override_field = std::nullopt);
Graph load_graph(const std::string& path);
R2Instance load_r2(const std::string& path, const std::optional<Field>& override_field = std::nullopt);
RkInstance load_rk(const std::string& path, const std::optional<Field>& override_field = std::nullopt);

Json to_json(const Partition& pi);
Json to_json(const RhoResult& result);
Json to_json(const RigidityReport& report);
Json to_json(const SymbolicRank& rank);

}  // namespace rhoc::io
