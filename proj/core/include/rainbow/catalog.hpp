#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/formats.hpp"

namespace rainbow {

enum class ColouringKind { sidon, poly, circumradius, volume, similarity, constant, injective };

std::string_view to_string(ColouringKind kind);
ColouringKind parse_colouring_kind(std::string_view name);
bool needs_points(ColouringKind kind);

struct CatalogOptions {
    std::optional<SymPoly> poly;             // required for ColouringKind::poly
    ColouringSpec fixture_spec{2, 1, 1};     // for constant/injective
    Budget budget;
};

/// A colouring over an instance plus the domain value behind each vertex id.
struct ColouredInstance {
    Colouring colouring;
    std::vector<Json> domain_values;  // index = vertex id
    std::vector<Json> removed;        // values dropped by preparation (poly zero set)
};

/// Builds the selected colouring. Point colourings first run the
/// general-position validators required by their lambda; a failure raises
/// ValidationError carrying the offending vertex ids.
ColouredInstance colour_instance(const Instance& inst, ColouringKind kind, const CatalogOptions& options);

Json vertices_to_json(const ColouredInstance& ci, std::span<const Vertex> vertices);

/// {"subset":[...], "size":n, "algorithm":..., "seed":..., "verified":..., "stats":{...}}
/// plus the colouring label and (k, h, lambda). Runtime is left out so that
/// seeded runs produce byte-identical files.
Json result_to_json(const ColouredInstance& ci, const RainbowResult& result);

Json report_to_json(const ColouredInstance& ci, const LambdaVerdict& verdict);

}  // namespace rainbow
