#include "rainbow/catalog.hpp"

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

std::vector<Json> point_values(const PointInstance& inst) {
    std::vector<Json> out;
    out.reserve(inst.points.size());
    for (const auto& p : inst.points) {
        Json point = Json::array();
        for (const auto& c : p.coords) point.push_back(rational_to_json(c));
        out.push_back(std::move(point));
    }
    return out;
}

std::vector<Json> integer_values(const IntegerInstance& inst) {
    std::vector<Json> out;
    out.reserve(inst.values.size());
    for (const auto& v : inst.values) out.emplace_back(v.get_str());
    return out;
}

std::string describe_witness(const std::vector<Json>& values, const VertexSet& witness) {
    Json arr = Json::array();
    for (Vertex v : witness) arr.push_back(values[v]);
    return arr.dump();
}

PointInstance validated(const PointInstance& inst, bool need_sphere, const Budget& budget) {
    PointInstance out = inst;
    if (auto bad = find_hyperplane_violation(out, budget)) {
        throw ValidationError(std::to_string(out.d + 1) + " points lie on a hyperplane: " +
                                  describe_witness(point_values(out), *bad),
                              *bad);
    }
    out.no_hyperplane = true;
    if (need_sphere) {
        if (auto bad = find_sphere_violation(out, budget)) {
            throw ValidationError(std::to_string(out.d + 2) + " points lie on a common sphere: " +
                                      describe_witness(point_values(out), *bad),
                                  *bad);
        }
        out.no_sphere = true;
    }
    return out;
}

}  // namespace

std::string_view to_string(ColouringKind kind) {
    switch (kind) {
        case ColouringKind::sidon: return "sidon";
        case ColouringKind::poly: return "poly";
        case ColouringKind::circumradius: return "circumradius";
        case ColouringKind::volume: return "volume";
        case ColouringKind::similarity: return "similarity";
        case ColouringKind::constant: return "constant";
        case ColouringKind::injective: return "injective";
    }
    return "unknown";
}

ColouringKind parse_colouring_kind(std::string_view name) {
    for (auto kind : {ColouringKind::sidon, ColouringKind::poly, ColouringKind::circumradius,
                      ColouringKind::volume, ColouringKind::similarity, ColouringKind::constant,
                      ColouringKind::injective}) {
        if (to_string(kind) == name) return kind;
    }
    throw ParameterError("unknown colouring '" + std::string{name} + "'");
}

bool needs_points(ColouringKind kind) {
    return kind == ColouringKind::circumradius || kind == ColouringKind::volume ||
           kind == ColouringKind::similarity;
}

ColouredInstance colour_instance(const Instance& inst, ColouringKind kind, const CatalogOptions& options) {
    const bool is_points = std::holds_alternative<PointInstance>(inst);
    if (needs_points(kind) && !is_points) {
        throw ParameterError(std::string{to_string(kind)} + " colouring needs a points instance");
    }
    if ((kind == ColouringKind::sidon || kind == ColouringKind::poly) && is_points) {
        throw ParameterError(std::string{to_string(kind)} + " colouring needs an integers instance");
    }
    std::vector<Json> values = is_points ? point_values(std::get<PointInstance>(inst))
                                         : integer_values(std::get<IntegerInstance>(inst));

    switch (kind) {
        case ColouringKind::sidon:
            return ColouredInstance{sidon_colouring(std::get<IntegerInstance>(inst)), std::move(values), {}};
        case ColouringKind::poly: {
            if (!options.poly) {
                throw ParameterError("poly colouring needs a polynomial");
            }
            const auto& ints = std::get<IntegerInstance>(inst).values;
            std::vector<mpq_class> x(ints.begin(), ints.end());
            const PreparedSet prepared = poly_prepare(*options.poly, x);
            if (prepared.y.empty()) {
                throw ParameterError("poly colouring: every element is a zero of q_j");
            }
            std::vector<Json> kept;
            std::vector<Json> removed;
            std::size_t next = 0;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (next < prepared.y_index.size() && prepared.y_index[next] == i) {
                    kept.push_back(values[i]);
                    ++next;
                } else {
                    removed.push_back(values[i]);
                }
            }
            return ColouredInstance{poly_colouring(*options.poly, prepared.y), std::move(kept),
                                    std::move(removed)};
        }
        case ColouringKind::circumradius:
            return ColouredInstance{
                circumradius_colouring(validated(std::get<PointInstance>(inst), true, options.budget)),
                std::move(values), {}};
        case ColouringKind::volume:
            return ColouredInstance{
                volume_colouring(validated(std::get<PointInstance>(inst), false, options.budget)),
                std::move(values), {}};
        case ColouringKind::similarity:
            return ColouredInstance{
                similarity_colouring(validated(std::get<PointInstance>(inst), false, options.budget)),
                std::move(values), {}};
        case ColouringKind::constant:
            return ColouredInstance{constant_colouring(values.size(), options.fixture_spec),
                                    std::move(values), {}};
        case ColouringKind::injective:
            return ColouredInstance{injective_colouring(values.size(), options.fixture_spec),
                                    std::move(values), {}};
    }
    throw InternalError("unhandled colouring kind");
}

Json vertices_to_json(const ColouredInstance& ci, std::span<const Vertex> vertices) {
    Json out = Json::array();
    for (Vertex v : vertices) out.push_back(ci.domain_values.at(v));
    return out;
}

namespace {

Json spec_fields(Json out, const Colouring& c) {
    out["colouring"] = c.label();
    out["k"] = c.spec().k;
    out["h"] = c.spec().h;
    out["lambda"] = c.spec().lambda;
    return out;
}

}  // namespace

Json result_to_json(const ColouredInstance& ci, const RainbowResult& result) {
    Json out;
    out["type"] = "rainbow_result";
    out = spec_fields(std::move(out), ci.colouring);
    out["subset"] = vertices_to_json(ci, result.subset);
    out["size"] = result.subset.size();
    out["algorithm"] = std::string{to_string(result.algorithm)};
    out["seed"] = result.seed ? Json(*result.seed) : Json(nullptr);
    out["verified"] = result.verified;
    Json stats;
    stats["vertices_kept"] = result.stats.vertices_kept;
    stats["conflict_pairs"] = result.stats.conflict_pairs;
    stats["pairs_destroyed"] = result.stats.pairs_destroyed;
    stats["vertices_deleted"] = result.stats.vertices_deleted;
    stats["nodes_explored"] = result.stats.nodes_explored;
    out["stats"] = std::move(stats);
    if (!ci.removed.empty()) {
        out["removed_zero_set"] = ci.removed;
    }
    return out;
}

Json report_to_json(const ColouredInstance& ci, const LambdaVerdict& verdict) {
    const SunflowerReport& r = verdict.report;
    Json out;
    out["type"] = "sunflower_report";
    out = spec_fields(std::move(out), ci.colouring);
    out["core"] = vertices_to_json(ci, r.core);
    out["colour"] = r.petals == 0 ? Json(nullptr) : Json(describe(r.colour));
    out["petals"] = r.petals;
    Json witnesses = Json::array();
    for (const auto& e : r.witness_edges) witnesses.push_back(vertices_to_json(ci, e));
    out["witness_edges"] = std::move(witnesses);
    out["verdict"] = verdict.holds ? "PASS" : "FAIL";
    return out;
}

}  // namespace rainbow
