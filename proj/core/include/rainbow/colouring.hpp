#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "rainbow/color_key.hpp"
#include "rainbow/combinatorics.hpp"

namespace rainbow {

/// Edge size k, sunflower core size h and the claimed petal bound lambda.
struct ColouringSpec {
    int k = 2;
    int h = 1;
    int lambda = 1;

    /// Throws ParameterError unless k >= 1, 0 <= h < k and lambda >= 1.
    void validate() const;

    friend bool operator==(const ColouringSpec&, const ColouringSpec&) = default;
};

/// A pure map from k-subsets of {0..domain_size-1} to colour keys.
///
/// The evaluator must be deterministic and insensitive to the order of the
/// ids it receives. Colourings are immutable and may be shared between
/// threads.
class Colouring {
public:
    using Evaluator = std::function<ColorKey(std::span<const Vertex>)>;

    Colouring(ColouringSpec spec, std::size_t domain_size, std::string label, Evaluator evaluator);

    const ColouringSpec& spec() const noexcept { return spec_; }
    std::size_t k() const noexcept { return static_cast<std::size_t>(spec_.k); }
    std::size_t domain_size() const noexcept { return domain_size_; }
    const std::string& label() const noexcept { return label_; }

    /// Colour of one k-subset. Ids need not be sorted.
    ColorKey operator()(std::span<const Vertex> edge) const;

    /// Same as operator() but skips the arity/range checks; for hot loops
    /// whose callers already guarantee a well-formed edge.
    ColorKey evaluate_unchecked(std::span<const Vertex> edge) const { return (*evaluator_)(edge); }

    /// Throws ParameterError if `ground` is not a prefix of the domain.
    void require_ground(const GroundSet& ground) const;

private:
    ColouringSpec spec_;
    std::size_t domain_size_;
    std::string label_;
    std::shared_ptr<const Evaluator> evaluator_;
};

// Fixture colourings. These carry no mathematical lambda guarantee beyond the
// one supplied in `spec`; they exist for testing and for auditing.

/// Every edge gets the same colour.
Colouring constant_colouring(std::size_t domain_size, ColouringSpec spec);

/// Every edge gets its own colour (its colex rank).
Colouring injective_colouring(std::size_t domain_size, ColouringSpec spec);

/// Each edge gets a pseudo-random colour in [0, palette) derived from
/// (seed, sorted edge). Deterministic.
Colouring random_colouring(std::size_t domain_size, ColouringSpec spec, std::uint32_t palette,
                           std::uint64_t seed);

}  // namespace rainbow
