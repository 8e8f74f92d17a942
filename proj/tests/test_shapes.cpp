#include <algorithm>

#include "doctest.h"
#include "shapecount/shapes.hpp"

using namespace shapecount;

TEST_CASE("shape parsing") {
    CHECK(parse_shape("1,3").exponents == std::vector<uint32_t>{1, 3});
    CHECK(parse_shape(" 2 , 1 , 2 ").exponents ==
          std::vector<uint32_t>{2, 1, 2});
    CHECK(parse_shape("7").exponents == std::vector<uint32_t>{7});
    CHECK_THROWS_AS(parse_shape(""), domain_error);
    CHECK_THROWS_AS(parse_shape("1,,3"), domain_error);
    CHECK_THROWS_AS(parse_shape("1,3,"), domain_error);
    CHECK_THROWS_AS(parse_shape("0,3"), domain_error);
    CHECK_THROWS_AS(parse_shape("1,-2"), domain_error);
    CHECK_THROWS_AS(parse_shape("1,a"), domain_error);
}

TEST_CASE("shape round trip") {
    for (const char* s : {"1,3", "2,1,2", "7"})
        CHECK(to_string(parse_shape(s)) == s);
}

TEST_CASE("normalize splits off the smallest exponent") {
    ShapeSignature sig = normalize(parse_shape("1,3"));
    CHECK(sig.alpha == 1);
    CHECK(sig.k == 1);
    CHECK(sig.beta == std::vector<uint32_t>{3});

    sig = normalize(parse_shape("3,1,1,5"));
    CHECK(sig.alpha == 1);
    CHECK(sig.k == 2);
    CHECK(sig.beta == std::vector<uint32_t>{3, 5});

    sig = normalize(parse_shape("2,2"));
    CHECK(sig.alpha == 2);
    CHECK(sig.k == 2);
    CHECK(sig.beta.empty());
}

TEST_CASE("normalization is permutation invariant") {
    std::vector<uint32_t> exps{4, 1, 2, 1, 3};
    std::sort(exps.begin(), exps.end());
    ShapeSignature want = normalize(Shape{exps});
    do {
        ShapeSignature got = normalize(Shape{exps});
        CHECK(got.alpha == want.alpha);
        CHECK(got.k == want.k);
        CHECK(got.beta == want.beta);
    } while (std::next_permutation(exps.begin(), exps.end()));
}

namespace {

Factorization factorize_small(uint64_t n) {
    Factorization f;
    for (uint64_t p = 2; p * p <= n; ++p) {
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

}  // namespace

TEST_CASE("membership in both modes") {
    Shape s13 = parse_shape("1,3");
    CHECK(member(24, s13, Mode::Pi, factorize_small(24)));     // 2^3*3
    CHECK(member(24, s13, Mode::Sigma, factorize_small(24)));
    CHECK(member(16, s13, Mode::Sigma, factorize_small(16)));  // 2^(1+3)
    CHECK_FALSE(member(16, s13, Mode::Pi, factorize_small(16)));
    CHECK_FALSE(member(12, s13, Mode::Sigma, factorize_small(12)));  // 2^2*3

    Shape s112 = parse_shape("1,1,2");
    CHECK(member(60, s112, Mode::Pi, factorize_small(60)));  // 2^2*3*5
    CHECK_FALSE(member(8, s112, Mode::Sigma, factorize_small(8)));  // sum is 4
    CHECK_FALSE(member(8, s112, Mode::Pi, factorize_small(8)));
}

TEST_CASE("sigma membership merges exponents additively") {
    // 36 = 2^2 * 3^2 fits (1,1,2) as 2^(1+1) * 3^2 and as 2^2 * 3^(1+1)
    Shape s = parse_shape("1,1,2");
    CHECK(member(36, s, Mode::Sigma, factorize_small(36)));
    CHECK_FALSE(member(36, s, Mode::Pi, factorize_small(36)));
    // 2^4 = 16 = 2^(1+1+2)
    CHECK(member(16, s, Mode::Sigma, factorize_small(16)));
    // 48 = 2^4 * 3: one extra prime, no assignment
    CHECK_FALSE(member(48, s, Mode::Sigma, factorize_small(48)));
}

TEST_CASE("pi membership implies sigma membership") {
    Shape shapes[] = {parse_shape("1,3"), parse_shape("1,1,2"),
                      parse_shape("2,2"), parse_shape("1,2,2")};
    for (uint64_t n = 2; n <= 5000; ++n) {
        Factorization f = factorize_small(n);
        for (const Shape& s : shapes)
            if (member(n, s, Mode::Pi, f)) CHECK(member(n, s, Mode::Sigma, f));
    }
}

TEST_CASE("member validates the supplied factorization") {
    CHECK_THROWS_AS(member(10, parse_shape("1"), Mode::Pi, factorize_small(6)),
                    domain_error);
}
