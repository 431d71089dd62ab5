#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mnum/polymset.hpp"

namespace mnum::testing {

// Random polymset with support inside [0, extent)^dim. Each cell is occupied
// with probability `density`; occupied cells get a multiplicity in [1, max_mult].
inline Polymset random_polymset(std::mt19937_64& rng, std::size_t dim, std::uint64_t extent,
                                std::uint64_t max_mult, double density = 0.5)
{
    std::bernoulli_distribution occupied(density);
    std::uniform_int_distribution<std::uint64_t> mult(1, max_mult);
    std::vector<Component> comps;
    std::vector<std::uint64_t> coords(dim, 0);
    while (true) {
        if (occupied(rng)) {
            comps.push_back({MultiIndex(coords), Natural(mult(rng))});
        }
        std::size_t d = dim;
        while (d-- > 0) {
            if (++coords[d] < extent) {
                break;
            }
            coords[d] = 0;
        }
        if (d == static_cast<std::size_t>(-1)) {
            break;
        }
    }
    return from_components(dim, std::move(comps));
}

// Density itself drawn at random, so empty and full supports both show up.
inline Polymset random_polymset_any_density(std::mt19937_64& rng, std::size_t dim, std::uint64_t extent,
                                            std::uint64_t max_mult)
{
    std::uniform_real_distribution<double> density(0.0, 1.0);
    return random_polymset(rng, dim, extent, max_mult, density(rng));
}

inline MultiIndex random_index(std::mt19937_64& rng, std::size_t dim, std::uint64_t extent)
{
    std::uniform_int_distribution<std::uint64_t> coord(0, extent - 1);
    std::vector<std::uint64_t> coords(dim);
    for (auto& c : coords) {
        c = coord(rng);
    }
    return MultiIndex(coords);
}

} // namespace mnum::testing
