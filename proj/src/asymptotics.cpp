#include "shapecount/asymptotics.hpp"

#include <cmath>

#include "shapecount/exact.hpp"

namespace shapecount {

namespace {

double factorial(uint32_t n) { return std::tgamma(double(n) + 1.0); }

SeriesConstant shape_constant(const ShapeSignature& sig, Mode mode, double tol,
                              const PrimeTable& table) {
    if (sig.beta.empty()) return {1.0, 0.0, 0};
    if (mode == Mode::Sigma && uniqueness_condition(sig.beta))
        return constant_as_product(sig, tol, table);
    return series_constant(sig, mode, tol, table);
}

std::string error_order_text(uint32_t alpha, uint32_t k) {
    std::string root =
        alpha == 1 ? "x" : "x^(1/" + std::to_string(alpha) + ")";
    if (k == 1) return "O(" + root + "/log^2 x)";
    if (k == 2) return "O(" + root + "/log x)";
    return "O(" + root + " (log log x)^" + std::to_string(k - 2) + "/log x)";
}

}  // namespace

double landau_main_term(double x, uint32_t k) {
    if (k == 0) throw domain_error("landau_main_term: k must be positive");
    if (!(x >= 100.0))
        throw domain_error("landau_main_term: x below the domain floor 100");
    double ll = std::log(std::log(x));
    return x * std::pow(ll, double(k - 1)) / (factorial(k - 1) * std::log(x));
}

EstimateBreakdown estimate_count(double x, const Shape& shape, Mode mode,
                                 double tolerance, const PrimeTable& table) {
    ShapeSignature sig = normalize(shape);
    double floor = std::pow(100.0, double(sig.alpha));
    if (!(x >= floor))
        throw domain_error(
            "estimate_count: x below the domain floor 100^alpha");

    EstimateBreakdown out;
    double ll = std::log(std::log(x));
    out.main_term = double(sig.alpha) * std::pow(x, 1.0 / sig.alpha) *
                    std::pow(ll, double(sig.k - 1)) /
                    (factorial(sig.k - 1) * std::log(x));
    out.constant = shape_constant(sig, mode, tolerance, table);
    out.estimate = out.main_term * out.constant.value;
    out.error_order = error_order_text(sig.alpha, sig.k);
    return out;
}

double equivalent_form(double x, const Shape& shape, Mode mode,
                       double tolerance, const PrimeTable& table) {
    ShapeSignature sig = normalize(shape);
    if (!(x >= 2.0)) return 0.0;
    if (x >= 1.8e19) throw domain_error("equivalent_form: x out of range");
    uint64_t y = nth_root_floor(static_cast<uint64_t>(x), sig.alpha);
    uint64_t cnt = mode == Mode::Sigma ? count_sigma_k(y, sig.k, table)
                                       : count_pi_k(y, sig.k, table);
    SeriesConstant c = shape_constant(sig, mode, tolerance, table);
    return double(cnt) * c.value;
}

}  // namespace shapecount
