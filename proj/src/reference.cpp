#include "shapecount/reference.hpp"

#include <cmath>

namespace shapecount::ref {

std::vector<uint64_t> simple_sieve(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (uint64_t p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        primes.push_back(p);
        for (uint64_t m = p * p; m <= limit; m += p) comp[m] = true;
    }
    return primes;
}

Factorization factorize_trial(uint64_t n) {
    if (n == 0) throw domain_error("factorize_trial: n must be positive");
    Factorization f;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

uint64_t count_by_membership(uint64_t x, const Shape& shape, Mode mode,
                             const PrimeTable& table) {
    if (x > table.lpf_limit())
        throw resource_error("count_by_membership: lpf table too small", x);
    uint64_t count = 0;
    for (uint64_t n = 2; n <= x; ++n)
        if (member(n, shape, mode, table.factorize(n))) ++count;
    return count;
}

long double sum_prime_powers(const PrimeTable& table, double s, uint64_t n) {
    long double sum = 0;
    for (uint64_t p : table.primes()) {
        if (p > n) break;
        sum += powl(static_cast<long double>(p), -static_cast<long double>(s));
    }
    return sum;
}

}  // namespace shapecount::ref
