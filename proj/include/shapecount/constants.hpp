#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shapecount/primes.hpp"
#include "shapecount/shapes.hpp"

namespace shapecount {

// A truncated convergent series: the true constant lies in
// [value, value + tail_bound].
struct SeriesConstant {
    double value = 0.0;
    double tail_bound = 0.0;
    uint64_t truncation_threshold = 0;  // saturates at UINT64_MAX
};

// Floating-point floor on all tolerances; summation error is not tracked
// below this.
constexpr double kToleranceFloor = 1e-12;

// P(s) = sum over primes of p^-s, s > 1.
SeriesConstant prime_zeta(double s, double tolerance, const PrimeTable& table);

// Truncation point N that prime_zeta would use for (s, tolerance). The table
// only needs primes up to sqrt(N).
uint64_t prime_zeta_truncation(double s, double tolerance);

// Sum over m in P_beta^mode of m^(-1/alpha), truncated with a rigorous tail
// bound. Empty beta yields the degenerate constant 1 with zero tail.
SeriesConstant series_constant(const ShapeSignature& signature, Mode mode,
                               double tolerance, const PrimeTable& table);

// True iff no nonzero vector in {-1,0,1}^r annihilates beta; equivalently no
// two disjoint nonempty sub-multisets of beta share a sum.
bool uniqueness_condition(const std::vector<uint32_t>& beta);

// Exhaustive search for two disjoint equal-sum sub-multisets (the witness
// that uniqueness fails). Also serves as the oracle for the DP above.
std::optional<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>>
find_equal_sum_split(const std::vector<uint32_t>& beta);

// Can two distinct canonical prime assignments of this exponent multiset
// produce the same integer (sigma mode)? True requires two disjoint
// equal-sum sub-multisets that differ as multisets; conservatively true for
// very long shapes.
bool sigma_collision_possible(const std::vector<uint32_t>& exponents);

// Product closed form prod_i P(beta_i / alpha); requires the uniqueness
// condition on beta.
SeriesConstant constant_as_product(const ShapeSignature& signature,
                                   double tolerance, const PrimeTable& table);

}  // namespace shapecount
