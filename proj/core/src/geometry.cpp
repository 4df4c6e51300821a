#include "rainbow/geometry.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>

#include "exact_matrix.hpp"
#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow {
namespace {

using detail::RationalMatrix;
using PointRefs = std::vector<const RationalPoint*>;

PointRefs refs_of(std::span<const RationalPoint> points) {
    PointRefs out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(&p);
    return out;
}

void require_simplex(const PointRefs& simplex, std::string_view what) {
    if (simplex.empty()) {
        throw ParameterError(std::string{what} + ": empty point tuple");
    }
    const std::size_t d = simplex.size() - 1;
    if (d < 1) {
        throw ParameterError(std::string{what} + ": need d+1 >= 2 points");
    }
    for (const auto* p : simplex) {
        if (p->dim() != d) {
            throw ParameterError(std::string{what} + ": " + std::to_string(simplex.size()) +
                                 " points must live in dimension " + std::to_string(d) +
                                 ", got a point of dimension " + std::to_string(p->dim()));
        }
    }
}

mpq_class squared_distance(const RationalPoint& a, const RationalPoint& b) {
    mpq_class total = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const mpq_class diff = a.coords[i] - b.coords[i];
        total += diff * diff;
    }
    return total;
}

mpq_class factorial(std::size_t n) {
    mpz_class out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= static_cast<unsigned long>(i);
    return mpq_class{out};
}

mpq_class squared_volume_refs(const PointRefs& simplex) {
    require_simplex(simplex, "squared_volume");
    const std::size_t d = simplex.size() - 1;
    RationalMatrix cm(d + 2, d + 2);
    for (std::size_t i = 1; i < d + 2; ++i) {
        cm.at(0, i) = 1;
        cm.at(i, 0) = 1;
    }
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = i + 1; j <= d; ++j) {
            const mpq_class dist = squared_distance(*simplex[i], *simplex[j]);
            cm.at(i + 1, j + 1) = dist;
            cm.at(j + 1, i + 1) = dist;
        }
    }
    const mpq_class det = detail::determinant(std::move(cm));
    mpz_class two_pow_d = 1;
    two_pow_d <<= static_cast<mp_bitcnt_t>(d);
    const mpq_class fact = factorial(d);
    mpq_class vol2 = det / (mpq_class{two_pow_d} * fact * fact);
    if ((d + 1) % 2 == 1) vol2 = -vol2;
    return vol2;
}

// Orientation determinant det[x_i - x_0]; zero iff affinely dependent.
bool affinely_dependent(const PointRefs& simplex) {
    const std::size_t d = simplex.size() - 1;
    RationalMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m.at(i, j) = simplex[i + 1]->coords[j] - simplex[0]->coords[j];
        }
    }
    return sgn(detail::determinant(std::move(m))) == 0;
}

bool lifted_determinant_vanishes(const PointRefs& points) {
    const std::size_t n = points.size();
    const std::size_t d = n - 2;
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        mpq_class norm = 0;
        for (std::size_t j = 0; j < d; ++j) {
            norm += points[r]->coords[j] * points[r]->coords[j];
            m.at(r, j + 1) = points[r]->coords[j];
        }
        m.at(r, 0) = norm;
        m.at(r, d + 1) = 1;
    }
    return sgn(detail::determinant(std::move(m))) == 0;
}

mpq_class squared_circumradius_refs(const PointRefs& simplex) {
    require_simplex(simplex, "squared_circumradius");
    const std::size_t d = simplex.size() - 1;
    // 2 (x_i - x_0) . c = |x_i|^2 - |x_0|^2
    RationalMatrix a(d, d);
    std::vector<mpq_class> b(d);
    mpq_class norm0 = 0;
    for (const auto& c : simplex[0]->coords) norm0 += c * c;
    for (std::size_t i = 0; i < d; ++i) {
        mpq_class norm = 0;
        for (std::size_t j = 0; j < d; ++j) {
            const mpq_class& x = simplex[i + 1]->coords[j];
            a.at(i, j) = 2 * (x - simplex[0]->coords[j]);
            norm += x * x;
        }
        b[i] = norm - norm0;
    }
    auto centre = detail::solve(std::move(a), std::move(b));
    if (!centre) {
        throw DegenerateInputError("squared_circumradius: points are affinely dependent");
    }
    const RationalPoint c{std::move(*centre)};
    const mpq_class r2 = squared_distance(c, *simplex[0]);
    for (std::size_t i = 1; i <= d; ++i) {
        if (squared_distance(c, *simplex[i]) != r2) {
            throw InternalError("circumcentre is not equidistant from every vertex");
        }
    }
    return r2;
}

ColorKey similarity_key_refs(const PointRefs& simplex) {
    require_simplex(simplex, "similarity_canonical_form");
    if (affinely_dependent(simplex)) {
        throw DegenerateInputError("similarity_canonical_form: points are affinely dependent");
    }
    const std::size_t n = simplex.size();
    std::vector<mpq_class> dist(n * n);
    mpq_class total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i * n + j] = squared_distance(*simplex[i], *simplex[j]);
            dist[j * n + i] = dist[i * n + j];
            total += dist[i * n + j];
        }
    }
    for (auto& x : dist) x /= total;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<mpq_class> best;
    std::vector<mpq_class> flat;
    flat.reserve(n * (n - 1) / 2);
    do {
        flat.clear();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                flat.push_back(dist[perm[i] * n + perm[j]]);
            }
        }
        if (best.empty() || std::lexicographical_compare(flat.begin(), flat.end(), best.begin(), best.end())) {
            best = flat;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<ColorKey> parts;
    parts.reserve(best.size());
    for (const auto& x : best) parts.push_back(encode_rational(x));
    return encode_sequence(parts);
}

template <typename Fn>
std::optional<VertexSet> first_bad_subset(const PointInstance& inst, std::size_t size,
                                          const Budget& budget, std::string_view what, Fn&& bad) {
    if (inst.points.size() < size) {
        return std::nullopt;
    }
    budget.require_subsets(binomial(inst.points.size(), size), what);
    std::optional<VertexSet> found;
    const VertexSet all = GroundSet{inst.points.size()}.elements();
    PointRefs refs(size);
    // for_each_ksubset has no early exit; the flag keeps the tail cheap.
    for_each_ksubset(all, size, [&](std::span<const Vertex> ids) {
        if (found) return;
        for (std::size_t i = 0; i < size; ++i) refs[i] = &inst.points[ids[i]];
        if (bad(refs)) found = VertexSet(ids.begin(), ids.end());
    });
    return found;
}

Colouring make_geometric_colouring(const PointInstance& inst, int lambda, std::string label,
                                   ColorKey (*colour)(const PointRefs&)) {
    const int d = static_cast<int>(inst.d);
    auto points = std::make_shared<const std::vector<RationalPoint>>(inst.points);
    return Colouring{ColouringSpec{d + 1, d, lambda}, inst.points.size(), std::move(label),
                     [points, colour](std::span<const Vertex> ids) {
                         VertexSet sorted(ids.begin(), ids.end());
                         std::sort(sorted.begin(), sorted.end());
                         PointRefs refs;
                         refs.reserve(sorted.size());
                         for (Vertex v : sorted) refs.push_back(&(*points)[v]);
                         return colour(refs);
                     }};
}

}  // namespace

RationalPoint::RationalPoint(std::vector<mpq_class> c) : coords(std::move(c)) {
    for (auto& x : coords) x.canonicalize();
}

PointInstance make_point_instance(std::size_t d, std::vector<RationalPoint> points) {
    if (d < 1) {
        throw ParameterError("point dimension must be >= 1");
    }
    if (points.empty()) {
        throw ParameterError("point instance must contain at least one point");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != d) {
            throw ParameterError("point " + std::to_string(i) + " has dimension " +
                                 std::to_string(points[i].dim()) + ", expected " + std::to_string(d));
        }
        for (auto& x : points[i].coords) x.canonicalize();
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].coords < points[b].coords;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points[order[i]] == points[order[i - 1]]) {
            throw ParameterError("points " + std::to_string(order[i - 1]) + " and " +
                                 std::to_string(order[i]) + " coincide");
        }
    }
    return PointInstance{d, std::move(points), false, false};
}

mpq_class squared_volume(std::span<const RationalPoint> simplex) {
    return squared_volume_refs(refs_of(simplex));
}

mpq_class squared_circumradius(std::span<const RationalPoint> simplex) {
    return squared_circumradius_refs(refs_of(simplex));
}

ColorKey similarity_canonical_form(std::span<const RationalPoint> simplex) {
    return similarity_key_refs(refs_of(simplex));
}

std::optional<VertexSet> find_hyperplane_violation(const PointInstance& inst, const Budget& budget) {
    return first_bad_subset(inst, inst.d + 1, budget, "check_no_hyperplane", affinely_dependent);
}

bool check_no_hyperplane(const PointInstance& inst, const Budget& budget) {
    return !find_hyperplane_violation(inst, budget).has_value();
}

std::optional<VertexSet> find_sphere_violation(const PointInstance& inst, const Budget& budget) {
    return first_bad_subset(inst, inst.d + 2, budget, "check_no_sphere", lifted_determinant_vanishes);
}

bool check_no_sphere(const PointInstance& inst, const Budget& budget) {
    return !find_sphere_violation(inst, budget).has_value();
}

PointInstance validate_instance(PointInstance inst, const Budget& budget) {
    inst.no_hyperplane = check_no_hyperplane(inst, budget);
    inst.no_sphere = inst.no_hyperplane && check_no_sphere(inst, budget);
    return inst;
}

PointInstance generate_general_position(std::size_t n, std::size_t d, std::uint64_t seed,
                                        std::uint64_t coord_bound) {
    if (n < 1 || d < 1) {
        throw ParameterError("generator needs N >= 1 and d >= 1");
    }
    if (coord_bound < 1) {
        throw ParameterError("coord_bound must be >= 1");
    }
    const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(n);
    Rng rng{seed};
    std::vector<RationalPoint> accepted;
    std::uint64_t attempts = 0;

    // Does the candidate together with `size - 1` accepted points fail `bad`?
    auto conflicts = [&](const RationalPoint& candidate, std::size_t size, auto bad) {
        if (accepted.size() + 1 < size) return false;
        const VertexSet prefix = GroundSet{accepted.size()}.elements();
        PointRefs refs(size);
        refs[size - 1] = &candidate;
        bool hit = false;
        for_each_ksubset(prefix, size - 1, [&](std::span<const Vertex> ids) {
            if (hit) return;
            for (std::size_t i = 0; i + 1 < size; ++i) refs[i] = &accepted[ids[i]];
            hit = bad(refs);
        });
        return hit;
    };

    while (accepted.size() < n) {
        if (attempts++ >= max_attempts) {
            throw ResourceError("generate_general_position: gave up after " +
                                std::to_string(max_attempts) + " draws with " +
                                std::to_string(accepted.size()) + " of " + std::to_string(n) +
                                " points placed; try a larger coord_bound");
        }
        std::vector<mpq_class> coords(d);
        for (auto& c : coords) {
            c = mpq_class{mpz_class{std::to_string(uniform_below(rng, coord_bound + 1))}};
        }
        RationalPoint candidate{std::move(coords)};
        if (std::find(accepted.begin(), accepted.end(), candidate) != accepted.end()) continue;
        if (conflicts(candidate, d + 1, affinely_dependent)) continue;
        if (conflicts(candidate, d + 2, lifted_determinant_vanishes)) continue;
        accepted.push_back(std::move(candidate));
    }
    PointInstance inst = make_point_instance(d, std::move(accepted));
    inst.no_hyperplane = true;
    inst.no_sphere = true;
    return inst;
}

Colouring circumradius_colouring(const PointInstance& inst) {
    if (!inst.no_hyperplane || !inst.no_sphere) {
        throw PreconditionError(
            "circumradius colouring needs an instance validated for no hyperplane and no sphere violations");
    }
    return make_geometric_colouring(inst, 2, "circumradius", [](const PointRefs& refs) {
        return encode_rational(squared_circumradius_refs(refs));
    });
}

Colouring volume_colouring(const PointInstance& inst) {
    if (!inst.no_hyperplane) {
        throw PreconditionError("volume colouring needs an instance validated for no hyperplane violations");
    }
    return make_geometric_colouring(inst, 2 * static_cast<int>(inst.d), "volume",
                                    [](const PointRefs& refs) {
                                        return encode_rational(squared_volume_refs(refs));
                                    });
}

Colouring similarity_colouring(const PointInstance& inst) {
    if (!inst.no_hyperplane) {
        throw PreconditionError(
            "similarity colouring needs an instance validated for no hyperplane violations");
    }
    int fact = 1;
    for (int i = 2; i <= static_cast<int>(inst.d) + 1; ++i) fact *= i;
    return make_geometric_colouring(inst, 2 * fact, "similarity", similarity_key_refs);
}

}  // namespace rainbow
