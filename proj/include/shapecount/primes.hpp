#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shapecount/errors.hpp"

namespace shapecount {

// Exact prime factorization, primes strictly ascending.
struct Factorization {
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    uint64_t value() const;
    std::vector<uint32_t> exponents() const;
};

struct PrimePowerSum {
    long double sum;  // sum of p^-s over primes p <= n
    uint64_t count;   // pi(n)
};

// Immutable prime infrastructure: a materialized list of primes up to `limit`,
// a least-prime-factor table up to `lpf_limit`, and on-the-fly segmented
// sieving for ranges beyond `limit` (possible whenever sqrt(hi) <= limit).
//
// Memory budget: ~8 bytes per stored prime plus 4 bytes per integer up to
// lpf_limit. The hard cap kMaxLimit keeps the stored list under ~1 GiB.
class PrimeTable {
public:
    static constexpr uint64_t kDefaultLpfLimit = 10'000'000;
    static constexpr uint64_t kMaxLimit = 2'000'000'000;

    static PrimeTable build(uint64_t limit, uint64_t lpf_limit = kDefaultLpfLimit);

    uint64_t limit() const { return limit_; }
    uint64_t lpf_limit() const { return lpf_limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }

    // n in [2, lpf_limit]
    uint32_t least_prime_factor(uint64_t n) const;
    Factorization factorize(uint64_t n) const;

    // Number of primes p <= y. y must not exceed limit.
    uint64_t prime_count(double y) const;
    uint64_t prime_count_u64(uint64_t y) const;

    // Sum of p^-s over primes p <= n, with pi(n). n may exceed limit() as
    // long as sqrt(n) <= limit(); the extra range is sieved in segments.
    PrimePowerSum sum_prime_powers(double s, uint64_t n) const;

    // Primes in [lo, hi], same range rule as sum_prime_powers.
    std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) const;

private:
    uint64_t limit_ = 0;
    uint64_t lpf_limit_ = 0;
    std::vector<uint64_t> primes_;
    std::vector<uint32_t> lpf_;
};

uint64_t isqrt_u64(uint64_t n);

}  // namespace shapecount
