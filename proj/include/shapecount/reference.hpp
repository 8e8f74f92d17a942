#pragma once

#include <cstdint>
#include <vector>

#include "shapecount/primes.hpp"
#include "shapecount/shapes.hpp"

// Straightforward serial implementations. They double as correctness oracles
// for the parallel kernels and as the baseline side of the benchmark tool.
namespace shapecount::ref {

// Plain sieve of Eratosthenes, primes up to limit inclusive.
std::vector<uint64_t> simple_sieve(uint64_t limit);

Factorization factorize_trial(uint64_t n);

// Factorize every n <= x via the lpf table and apply the membership test.
uint64_t count_by_membership(uint64_t x, const Shape& shape, Mode mode,
                             const PrimeTable& table);

// Serial sum of p^-s over primes <= n stored in the table.
long double sum_prime_powers(const PrimeTable& table, double s, uint64_t n);

}  // namespace shapecount::ref
