#include "rainbow/colouring.hpp"

#include <algorithm>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

void ColouringSpec::validate() const {
    if (k < 1) {
        throw ParameterError("edge size k must be >= 1");
    }
    if (h < 0 || h >= k) {
        throw ParameterError("core size h must satisfy 0 <= h < k");
    }
    if (lambda < 1) {
        throw ParameterError("petal bound lambda must be >= 1");
    }
}

Colouring::Colouring(ColouringSpec spec, std::size_t domain_size, std::string label,
                     Evaluator evaluator)
    : spec_(spec),
      domain_size_(domain_size),
      label_(std::move(label)),
      evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))) {
    spec_.validate();
    if (domain_size_ == 0) {
        throw ParameterError("colouring domain must be non-empty");
    }
    if (!*evaluator_) {
        throw ParameterError("colouring evaluator is empty");
    }
}

ColorKey Colouring::operator()(std::span<const Vertex> edge) const {
    if (edge.size() != k()) {
        throw ParameterError("edge of size " + std::to_string(edge.size()) +
                             " passed to a colouring with k=" + std::to_string(k()));
    }
    for (Vertex v : edge) {
        if (v >= domain_size_) {
            throw ParameterError("vertex id " + std::to_string(v) + " outside colouring domain");
        }
    }
    return (*evaluator_)(edge);
}

void Colouring::require_ground(const GroundSet& ground) const {
    if (ground.size() > domain_size_) {
        throw ParameterError("ground set of size " + std::to_string(ground.size()) +
                             " exceeds colouring domain " + std::to_string(domain_size_));
    }
}

namespace {

VertexSet sorted_copy(std::span<const Vertex> edge) {
    VertexSet out(edge.begin(), edge.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Colouring constant_colouring(std::size_t domain_size, ColouringSpec spec) {
    return Colouring{spec, domain_size, "constant",
                     [](std::span<const Vertex>) { return encode_index(0); }};
}

Colouring injective_colouring(std::size_t domain_size, ColouringSpec spec) {
    return Colouring{spec, domain_size, "injective", [](std::span<const Vertex> edge) {
                         return encode_index(colex_rank(sorted_copy(edge)));
                     }};
}

Colouring random_colouring(std::size_t domain_size, ColouringSpec spec, std::uint32_t palette,
                           std::uint64_t seed) {
    if (palette == 0) {
        throw ParameterError("palette must be non-empty");
    }
    return Colouring{spec, domain_size, "random", [palette, seed](std::span<const Vertex> edge) {
                         std::uint64_t state = seed;
                         for (Vertex v : sorted_copy(edge)) {
                             state = splitmix64(state ^ (std::uint64_t{v} + 0x9e3779b97f4a7c15ULL));
                         }
                         return encode_index(splitmix64(state) % palette);
                     }};
}

}  // namespace rainbow
