#pragma once

#include <cstdint>
#include <vector>

#include "shapecount/primes.hpp"
#include "shapecount/shapes.hpp"

namespace shapecount {

struct CountResult {
    uint64_t x = 0;
    Shape shape;
    Mode mode = Mode::Sigma;
    uint64_t count = 0;
};

// Hyperbola-method sandwich on the sigma count.
struct BoundsPair {
    uint64_t lower = 0;
    uint64_t upper = 0;
};

// |{n <= x : Omega(n) = k}| by enumeration over nondecreasing prime tuples.
uint64_t count_sigma_k(uint64_t x, uint32_t k, const PrimeTable& table);

// |{n <= x : n squarefree, omega(n) = k}| over strictly increasing tuples.
uint64_t count_pi_k(uint64_t x, uint32_t k, const PrimeTable& table);

// Exact count of distinct integer values n <= x in the shape's set.
CountResult count_shape(uint64_t x, const Shape& shape, Mode mode,
                        const PrimeTable& table);

// All distinct m <= limit with m in P_beta^mode, ascending.
std::vector<uint64_t> enumerate_beta(uint64_t limit,
                                     const std::vector<uint32_t>& beta,
                                     Mode mode, const PrimeTable& table);

// lower = sum over m in P_beta^sigma of pi_k((x/m)^(1/alpha)),
// upper = same with sigma_k; lower <= sigma_shape(x) <= upper.
BoundsPair hyperbola_bounds(uint64_t x, const Shape& shape,
                            const PrimeTable& table);

// floor(y^(1/e)), exact at integer boundaries.
uint64_t nth_root_floor(uint64_t y, uint32_t e);

}  // namespace shapecount
