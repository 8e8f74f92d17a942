#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shapecount/primes.hpp"
#include "shapecount/shapes.hpp"

namespace shapecount {

struct ComparisonRow {
    uint64_t x = 0;
    uint64_t exact = 0;
    double estimate = 0.0;
    double semi_exact = 0.0;
    double ratio_exact_over_estimate = 0.0;
    double constant_value = 0.0;
    Mode mode = Mode::Sigma;
    Shape shape;
};

// "1e8" / "250000" -> exact integer; non-integral mantissa or overflow is a
// domain_error.
uint64_t parse_count_threshold(const std::string& text);

// Comma-separated thresholds; duplicates removed, result sorted ascending.
std::vector<uint64_t> parse_grid(const std::string& text);

// One row per grid point, ordered by x.
std::vector<ComparisonRow> run_comparison(const std::vector<uint64_t>& grid,
                                          const Shape& shape, Mode mode,
                                          double tolerance,
                                          const PrimeTable& table);

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace shapecount
