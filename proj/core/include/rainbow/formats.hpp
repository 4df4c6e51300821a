#pragma once

#include <filesystem>
#include <variant>

#include <nlohmann/json.hpp>

#include "rainbow/algebra.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/geometry.hpp"
#include "rainbow/sunflower.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

// Rationals are ["num", "den"] with decimal strings, den > 0, lowest terms.
Json rational_to_json(const mpq_class& value);
mpq_class rational_from_json(const Json& j);

// {"type":"points","d":2,"coords":[[["0","1"],["3","2"]], ...]}
Json to_json(const PointInstance& inst);
PointInstance points_from_json(const Json& j);

// {"type":"integers","values":["1","2", ...]}
Json to_json(const IntegerInstance& inst);
IntegerInstance integers_from_json(const Json& j);

// {"type":"sympoly","field":"Q"|{"GF":p},"degree":d,"coeffs":[[i,j,"c"], ...]}
Json to_json(const SymPoly& poly);
SymPoly sympoly_from_json(const Json& j);

using Instance = std::variant<IntegerInstance, PointInstance>;

/// Dispatches on "type": "integers" or "points".
Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rainbow
