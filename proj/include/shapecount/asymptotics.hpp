#pragma once

#include <string>

#include "shapecount/constants.hpp"
#include "shapecount/shapes.hpp"

namespace shapecount {

struct EstimateBreakdown {
    double main_term = 0.0;
    SeriesConstant constant;
    double estimate = 0.0;  // main_term * constant.value
    std::string error_order;
};

// x (log log x)^(k-1) / ((k-1)! log x); requires x >= 100.
double landau_main_term(double x, uint32_t k);

// alpha * x^(1/alpha) (log log x)^(k-1) / ((k-1)! log x) times the series
// constant for the shape; requires x >= 100^alpha.
EstimateBreakdown estimate_count(double x, const Shape& shape, Mode mode,
                                 double tolerance, const PrimeTable& table);

// Semi-exact estimator: the exact sigma_k/pi_k count at floor(x^(1/alpha))
// times the series constant.
double equivalent_form(double x, const Shape& shape, Mode mode,
                       double tolerance, const PrimeTable& table);

}  // namespace shapecount
