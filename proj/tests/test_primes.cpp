#include <cmath>

#include "doctest.h"
#include "shapecount/primes.hpp"
#include "shapecount/reference.hpp"

using namespace shapecount;

namespace {

const PrimeTable& table_1e6() {
    static PrimeTable t = PrimeTable::build(1'000'000, 1'000'000);
    return t;
}

}  // namespace

TEST_CASE("segmented sieve matches the simple sieve") {
    const auto& t = table_1e6();
    CHECK(t.primes() == ref::simple_sieve(1'000'000));
    CHECK(t.primes().size() == 78498);  // pi(1e6)
}

TEST_CASE("prime counting") {
    const auto& t = table_1e6();
    CHECK(t.prime_count_u64(1) == 0);
    CHECK(t.prime_count_u64(2) == 1);
    CHECK(t.prime_count_u64(10) == 4);
    CHECK(t.prime_count_u64(10'000) == 1229);
    CHECK(t.prime_count_u64(250'000) == 22044);
    CHECK(t.prime_count_u64(1'000'000) == 78498);
    CHECK_THROWS_AS(t.prime_count_u64(1'000'001), resource_error);
}

TEST_CASE("lpf factorization agrees with trial division") {
    const auto& t = table_1e6();
    for (uint64_t n : {2ull, 3ull, 4ull, 97ull, 360ull, 1024ull, 999'983ull,
                       720'720ull, 524'288ull}) {
        Factorization a = t.factorize(n);
        Factorization b = ref::factorize_trial(n);
        CHECK(a.factors == b.factors);
        CHECK(a.value() == n);
    }
    for (uint64_t n = 2; n <= 20'000; ++n)
        CHECK(t.factorize(n).value() == n);
}

TEST_CASE("factorize rejects out-of-range input") {
    PrimeTable t = PrimeTable::build(1000, 1000);
    CHECK_THROWS_AS(t.factorize(1001), resource_error);
    CHECK_THROWS_AS(t.factorize(0), domain_error);
}

TEST_CASE("prime power sums match the serial reference") {
    const auto& t = table_1e6();
    for (double s : {2.0, 3.0, 1.5}) {
        long double a = t.sum_prime_powers(s, 1'000'000).sum;
        long double b = ref::sum_prime_powers(t, s, 1'000'000);
        CHECK(std::abs(double(a - b)) < 1e-14);
    }
    CHECK(t.sum_prime_powers(2.0, 1'000'000).count == 78498);
}

TEST_CASE("streaming beyond the stored limit") {
    PrimeTable small = PrimeTable::build(2000, 100);
    const auto& big = table_1e6();
    // 2000^2 = 4e6 >= 1e6, so the small table can stream to 1e6
    PrimePowerSum a = small.sum_prime_powers(2.0, 1'000'000);
    PrimePowerSum b = big.sum_prime_powers(2.0, 1'000'000);
    CHECK(a.count == b.count);
    CHECK(std::abs(double(a.sum - b.sum)) < 1e-13);
    CHECK_THROWS_AS(small.sum_prime_powers(2.0, 5'000'000), resource_error);

    auto mid = small.primes_in(999'900, 1'000'000);
    std::vector<uint64_t> want;
    for (uint64_t p : big.primes())
        if (p >= 999'900) want.push_back(p);
    CHECK(mid == want);
}

TEST_CASE("integer square root") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(1) == 1);
    CHECK(isqrt_u64(3) == 1);
    CHECK(isqrt_u64(4) == 2);
    CHECK(isqrt_u64(999'999) == 999);
    CHECK(isqrt_u64(1'000'000) == 1000);
    CHECK(isqrt_u64(UINT64_MAX) == 4294967295ull);
}
