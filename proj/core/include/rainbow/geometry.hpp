#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "rainbow/budget.hpp"
#include "rainbow/colouring.hpp"

namespace rainbow {

/// A point of Q^d. Coordinates are kept in lowest terms.
struct RationalPoint {
    std::vector<mpq_class> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<mpq_class> c);

    std::size_t dim() const noexcept { return coords.size(); }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
};

/// A finite point set in Q^d together with which general-position checks it
/// has passed. The flags are only ever set by validate_instance or the
/// generator.
struct PointInstance {
    std::size_t d = 0;
    std::vector<RationalPoint> points;
    bool no_hyperplane = false;  // no d+1 points on a hyperplane
    bool no_sphere = false;      // no d+2 points on a (d-1)-sphere
};

/// Checks dimensions and distinctness; flags start cleared.
PointInstance make_point_instance(std::size_t d, std::vector<RationalPoint> points);

/// Squared volume of the simplex on d+1 points of Q^d, from the
/// Cayley-Menger determinant:
///   Vol^2 = (-1)^(d+1) / (2^d (d!)^2) * det(CM).
/// Zero iff the points are affinely dependent.
mpq_class squared_volume(std::span<const RationalPoint> simplex);

/// Squared radius of the sphere through d+1 affinely independent points.
/// Throws DegenerateInputError for dependent input.
mpq_class squared_circumradius(std::span<const RationalPoint> simplex);

/// Key identifying the simplex up to similarity (translation, rotation,
/// reflection, uniform scaling): the squared-distance upper triangle divided
/// by its sum, minimized lexicographically over all vertex orders.
ColorKey similarity_canonical_form(std::span<const RationalPoint> simplex);

/// First (d+1)-subset (lexicographic) lying on a hyperplane, if any.
std::optional<VertexSet> find_hyperplane_violation(const PointInstance& inst, const Budget& budget = {});
bool check_no_hyperplane(const PointInstance& inst, const Budget& budget = {});

/// First (d+2)-subset whose lifted determinant det[|x|^2, x_1..x_d, 1]
/// vanishes. On instances without hyperplane violations this means the
/// points are cospherical.
std::optional<VertexSet> find_sphere_violation(const PointInstance& inst, const Budget& budget = {});
bool check_no_sphere(const PointInstance& inst, const Budget& budget = {});

/// Runs both checks and records the outcome in the flags. The sphere check
/// only runs when the hyperplane check passes.
PointInstance validate_instance(PointInstance inst, const Budget& budget = {});

/// Integer points drawn uniformly from [0, coord_bound]^d, rejecting any
/// candidate that would create a hyperplane or sphere violation with the
/// points accepted so far. Throws ResourceError after 1000*N rejected draws.
/// coord_bound >= 4N^2 leaves comfortable room.
PointInstance generate_general_position(std::size_t n, std::size_t d, std::uint64_t seed,
                                        std::uint64_t coord_bound);

// Colourings of (d+1)-subsets with k = d+1 and h = d.

/// lambda = 2; needs both flags.
Colouring circumradius_colouring(const PointInstance& inst);
/// lambda = 2d; needs no_hyperplane.
Colouring volume_colouring(const PointInstance& inst);
/// lambda = 2(d+1)!; needs no_hyperplane.
Colouring similarity_colouring(const PointInstance& inst);

}  // namespace rainbow
