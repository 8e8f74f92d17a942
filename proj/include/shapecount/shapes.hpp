#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shapecount/primes.hpp"

namespace shapecount {

// Sigma: prime repetitions across slots allowed (exponents merge additively).
// Pi: all primes pairwise distinct.
enum class Mode { Sigma, Pi };

const char* to_string(Mode mode);

// A factorization pattern p1^e1 * ... * pk^ek, stored as the user gave it.
struct Shape {
    std::vector<uint32_t> exponents;
};

// Parses the CLI grammar: comma-separated positive integers, whitespace ignored.
Shape parse_shape(std::string_view text);
std::string to_string(const Shape& shape);

// (alpha, k, beta): smallest exponent, its multiplicity, and the remaining
// strictly larger exponents sorted ascending.
struct ShapeSignature {
    uint32_t alpha = 0;
    uint32_t k = 0;
    std::vector<uint32_t> beta;
};

ShapeSignature normalize(const Shape& shape);

// Does n belong to the shape's set in the given mode? `factorization` must be
// the exact factorization of n.
bool member(uint64_t n, const Shape& shape, Mode mode,
            const Factorization& factorization);

}  // namespace shapecount
