#include <cmath>

#include "doctest.h"
#include "shapecount/asymptotics.hpp"
#include "shapecount/exact.hpp"

using namespace shapecount;

namespace {

const PrimeTable& table() {
    static PrimeTable t = PrimeTable::build(2'000'000, 100);
    return t;
}

}  // namespace

TEST_CASE("landau main term closed form") {
    double x = 1e6;
    CHECK(landau_main_term(x, 1) == doctest::Approx(x / std::log(x)));
    double ll = std::log(std::log(x));
    CHECK(landau_main_term(x, 3) ==
          doctest::Approx(x * ll * ll / (2.0 * std::log(x))));
    CHECK_THROWS_AS(landau_main_term(50.0, 1), domain_error);
    CHECK_THROWS_AS(landau_main_term(1e6, 0), domain_error);
}

TEST_CASE("estimate for the plain prime shape is the main term") {
    EstimateBreakdown e =
        estimate_count(1e6, Shape{{1}}, Mode::Sigma, 1e-9, table());
    CHECK(e.constant.value == 1.0);
    CHECK(e.estimate == doctest::Approx(landau_main_term(1e6, 1)));
    CHECK(e.error_order == "O(x/log^2 x)");
}

TEST_CASE("estimate composes main term and constant") {
    Shape s = parse_shape("1,3");
    EstimateBreakdown e = estimate_count(1e6, s, Mode::Sigma, 1e-9, table());
    CHECK(e.constant.value == doctest::Approx(0.1747626393).epsilon(1e-8));
    CHECK(e.estimate == doctest::Approx(e.main_term * e.constant.value));
    CHECK(e.main_term == doctest::Approx(landau_main_term(1e6, 1)));
}

TEST_CASE("alpha scaling of the main term") {
    Shape s = parse_shape("2,2");  // alpha=2, k=2, beta empty
    double x = 1e8;
    EstimateBreakdown e = estimate_count(x, s, Mode::Sigma, 1e-9, table());
    double ll = std::log(std::log(x));
    double want = 2.0 * std::sqrt(x) * ll / std::log(x);
    CHECK(e.estimate == doctest::Approx(want));
    CHECK(e.error_order == "O(x^(1/2)/log x)");
}

TEST_CASE("domain floor scales with alpha") {
    CHECK_THROWS_AS(
        estimate_count(5000.0, parse_shape("2,2"), Mode::Sigma, 1e-9, table()),
        domain_error);
    CHECK_NOTHROW(
        estimate_count(10001.0, parse_shape("2,2"), Mode::Sigma, 1e-9, table()));
}

TEST_CASE("semi-exact estimator uses the exact root count") {
    Shape s = parse_shape("1,3");
    double x = 1e6;
    double got = equivalent_form(x, s, Mode::Pi, 1e-9, table());
    uint64_t root_count = count_pi_k(1'000'000, 1, table());
    CHECK(got == doctest::Approx(double(root_count) * 0.174762639299).epsilon(1e-7));
    // estimate and semi-exact agree to within tens of percent at this x
    EstimateBreakdown e = estimate_count(x, s, Mode::Pi, 1e-9, table());
    CHECK(std::abs(got / e.estimate - 1.0) < 0.3);
}

TEST_CASE("ratio exact/estimate decreases for shape (1,3) pi") {
    Shape s = parse_shape("1,3");
    PrimeTable big = PrimeTable::build(13'000'000, 100);
    double prev = 1e18;
    for (uint64_t x : {10'000ull, 1'000'000ull, 100'000'000ull}) {
        // exact via the identity: sum over primes q of pi(x/q^3) minus the
        // q^4 <= x self-collisions
        uint64_t exact = 0;
        for (uint64_t q : big.primes()) {
            if (q * q * q > x) break;
            uint64_t m = x / (q * q * q);
            uint64_t c = big.prime_count_u64(m);
            if (q <= m) --c;
            exact += c;
        }
        double ratio =
            double(exact) /
            estimate_count(double(x), s, Mode::Pi, 1e-9, big).estimate;
        CHECK(ratio > 1.0);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev < 1.4);
}
