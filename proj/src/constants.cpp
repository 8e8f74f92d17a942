#include "shapecount/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "shapecount/exact.hpp"

namespace shapecount {

namespace {

using u128 = unsigned __int128;

constexpr double kRosser = 1.25506;  // pi(t) < 1.25506 t / log t for t > 1

u128 u128_pow_capped(uint64_t p, uint32_t e, u128 cap) {
    u128 r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (p != 0 && r > cap / p) return cap + 1;
        r *= p;
    }
    return r;
}

// floor(y^(1/e)) for 128-bit y, clamped to uint64.
uint64_t nth_root_u128(u128 y, uint32_t e) {
    if (e == 0) throw domain_error("nth_root_u128: exponent must be positive");
    if (y == 0) return 0;
    if (e == 1) return y > static_cast<u128>(UINT64_MAX)
                           ? UINT64_MAX
                           : static_cast<uint64_t>(y);
    if (e >= 128) return 1;
    long double approx = powl(static_cast<long double>(y), 1.0L / e);
    uint64_t r = approx >= 1.8e19L ? UINT64_MAX : static_cast<uint64_t>(approx);
    while (r > 0 && u128_pow_capped(r, e, y) > y) --r;
    while (r < UINT64_MAX && u128_pow_capped(r + 1, e, y) <= y) ++r;
    return r;
}

double integral_tail(double s, double n) {
    // sum over integers m > n of m^-s
    return std::pow(n, 1.0 - s) / (s - 1.0);
}

double rosser_tail_no_pi(double s, double n) {
    return kRosser * s / ((s - 1.0) * std::log(n)) * std::pow(n, 1.0 - s);
}

}  // namespace

uint64_t prime_zeta_truncation(double s, double tolerance) {
    if (!(s > 1.0)) throw domain_error("prime_zeta diverges for s <= 1");
    if (!(tolerance > 0.0)) throw domain_error("tolerance must be positive");
    double tol = std::max(tolerance, kToleranceFloor);

    double naive = std::pow(tol * (s - 1.0), 1.0 / (1.0 - s));
    uint64_t n_naive =
        naive > 4e18 ? UINT64_MAX : static_cast<uint64_t>(std::ceil(naive));

    // Smallest power-of-two-ish N satisfying the Rosser-based bound, then a
    // binary refinement.
    uint64_t hi = 8;
    while (hi < (uint64_t{1} << 62) && rosser_tail_no_pi(s, double(hi)) > tol)
        hi *= 2;
    uint64_t lo = hi / 2;
    while (lo + 1 < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (rosser_tail_no_pi(s, double(mid)) <= tol)
            hi = mid;
        else
            lo = mid;
    }
    return std::max<uint64_t>(std::min(n_naive, hi), 3);
}

SeriesConstant prime_zeta(double s, double tolerance, const PrimeTable& table) {
    uint64_t n = prime_zeta_truncation(s, tolerance);
    PrimePowerSum ps = table.sum_prime_powers(s, n);
    double tail = integral_tail(s, double(n));
    double rosser = rosser_tail_no_pi(s, double(n)) -
                    double(ps.count) * std::pow(double(n), -s);
    tail = std::min(tail, std::max(rosser, 0.0));
    return {static_cast<double>(ps.sum), std::max(tail, 0.0), n};
}

bool uniqueness_condition(const std::vector<uint32_t>& beta) {
    if (beta.empty()) return true;  // no nonzero sign vector exists at all
    std::unordered_set<int64_t> reach;
    for (uint32_t a : beta) {
        if (a == 0) throw domain_error("uniqueness_condition: zero entry");
        std::unordered_set<int64_t> next = reach;
        next.insert(int64_t{a});
        next.insert(-int64_t{a});
        for (int64_t r : reach) {
            next.insert(r + int64_t{a});
            next.insert(r - int64_t{a});
        }
        reach = std::move(next);
    }
    return reach.count(0) == 0;
}

std::optional<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>>
find_equal_sum_split(const std::vector<uint32_t>& beta) {
    size_t r = beta.size();
    if (r == 0 || r > 24) return std::nullopt;
    std::vector<int64_t> suffix(r + 1, 0);
    for (size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] + beta[i];
    std::vector<int8_t> sign(r, 0);

    std::function<bool(size_t, int64_t, bool)> dfs =
        [&](size_t i, int64_t sum, bool nonzero) -> bool {
        if (std::llabs(sum) > suffix[i]) return false;
        if (i == r) return nonzero && sum == 0;
        for (int8_t sg : {int8_t{1}, int8_t{-1}, int8_t{0}}) {
            sign[i] = sg;
            if (dfs(i + 1, sum + sg * int64_t{beta[i]}, nonzero || sg != 0))
                return true;
        }
        return false;
    };
    if (!dfs(0, 0, false)) return std::nullopt;

    std::vector<uint32_t> plus, minus;
    for (size_t i = 0; i < r; ++i) {
        if (sign[i] > 0) plus.push_back(beta[i]);
        if (sign[i] < 0) minus.push_back(beta[i]);
    }
    return std::make_pair(plus, minus);
}

bool sigma_collision_possible(const std::vector<uint32_t>& exponents) {
    size_t r = exponents.size();
    if (r < 2) return false;
    if (r > 20) return true;  // too long for exhaustive search; play safe
    std::vector<int64_t> suffix(r + 1, 0);
    for (size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] + exponents[i];
    std::vector<int8_t> sign(r, 0);

    std::function<bool(size_t, int64_t)> dfs = [&](size_t i,
                                                   int64_t sum) -> bool {
        if (std::llabs(sum) > suffix[i]) return false;
        if (i == r) {
            if (sum != 0) return false;
            std::vector<uint32_t> plus, minus;
            for (size_t j = 0; j < r; ++j) {
                if (sign[j] > 0) plus.push_back(exponents[j]);
                if (sign[j] < 0) minus.push_back(exponents[j]);
            }
            if (plus.empty()) return false;
            std::sort(plus.begin(), plus.end());
            std::sort(minus.begin(), minus.end());
            // Equal multisets cancel under canonical ordering; only a genuine
            // exchange of different blocks creates a second representation.
            return plus != minus;
        }
        for (int8_t sg : {int8_t{1}, int8_t{-1}, int8_t{0}}) {
            sign[i] = sg;
            if (dfs(i + 1, sum + sg * int64_t{exponents[i]})) return true;
        }
        return false;
    };
    return dfs(0, 0);
}

namespace {

// Prefix sums of p^-s over the table's stored primes, extended on demand.
struct PrefixSums {
    const PrimeTable& t;
    double s;
    std::vector<double> prefix{0.0};  // prefix[i] = sum over first i primes

    PrefixSums(const PrimeTable& table, double s_) : t(table), s(s_) {}

    void ensure(uint64_t bound) {
        if (bound > t.limit())
            throw resource_error(
                "series constant needs primes up to " + std::to_string(bound),
                bound);
        size_t need = static_cast<size_t>(t.prime_count_u64(bound));
        const auto& P = t.primes();
        long double acc = prefix.back();
        while (prefix.size() <= need) {
            acc += powl(static_cast<long double>(P[prefix.size() - 1]),
                        -static_cast<long double>(s));
            prefix.push_back(static_cast<double>(acc));
        }
    }

    // sum over primes p <= bound with index >= start_idx
    double range(size_t start_idx, uint64_t bound) const {
        const auto& P = t.primes();
        auto it = std::upper_bound(P.begin(), P.end(), bound);
        size_t hi = static_cast<size_t>(it - P.begin());
        if (hi <= start_idx) return 0.0;
        return prefix[hi] - prefix[start_idx];
    }
};

struct BetaSeries {
    const PrimeTable& t;
    Mode mode;
    double inv_alpha;
    std::vector<uint32_t> exps;  // descending; last slot has smallest exponent
    std::vector<double> s;       // exps[i] / alpha
    std::vector<u128> cross_min; // min product of slots after i (2^e each)
    PrefixSums prefix;

    BetaSeries(const PrimeTable& table, const std::vector<uint32_t>& beta,
               uint32_t alpha, Mode m)
        : t(table), mode(m), inv_alpha(1.0 / alpha), prefix(table, 0.0) {
        exps = beta;
        std::sort(exps.begin(), exps.end(), std::greater<>());
        for (uint32_t e : exps) s.push_back(double(e) * inv_alpha);
        size_t n = exps.size();
        cross_min.assign(n, 1);
        for (size_t i = 0; i < n; ++i) {
            uint64_t bits = 0;
            for (size_t j = i + 1; j < n; ++j) bits += exps[j];
            cross_min[i] = bits >= 127 ? ~u128{0} : (u128{1} << bits);
        }
        prefix.s = s.back();
    }

    uint64_t last_slot_bound(u128 budget) const {
        return nth_root_u128(budget, exps.back());
    }

    void ensure_prefix(u128 T) {
        // largest budget the last slot can see: T divided by the minimal
        // product of all earlier slots
        uint64_t bits = 0;
        for (size_t i = 0; i + 1 < exps.size(); ++i) bits += exps[i];
        u128 rest = bits >= 127 ? ~u128{0} : (u128{1} << bits);
        uint64_t bound = last_slot_bound(T / rest);
        prefix.ensure(bound);
    }

    // Sum of prod^(-1/alpha) over all ordered slot assignments with
    // prod = PI p_i^(exps_i) <= T; primes repeat freely. Converges to
    // PI P(exps_i / alpha) as T grows.
    double representation_sum(u128 T) {
        ensure_prefix(T);
        return rep_rec(0, T, 1.0);
    }

    double rep_rec(size_t i, u128 budget, double coeff) {
        if (i + 1 == exps.size())
            return coeff * prefix.range(0, last_slot_bound(budget));
        uint64_t pmax = nth_root_u128(budget / cross_min[i], exps[i]);
        if (pmax > t.limit())
            throw resource_error("series constant needs primes up to " +
                                     std::to_string(pmax),
                                 pmax);
        const auto& P = t.primes();
        double sum = 0.0;
        for (size_t idx = 0; idx < P.size() && P[idx] <= pmax; ++idx) {
            u128 pe = u128_pow_capped(P[idx], exps[i], budget);
            if (pe > budget) break;
            sum += rep_rec(i + 1, budget / pe,
                           coeff * std::pow(double(P[idx]), -s[i]));
        }
        return sum;
    }

    // Sum of m^(-1/alpha) over distinct members m <= T in the given mode.
    double value_sum(u128 T) {
        ensure_prefix(T);
        bool risky =
            mode == Mode::Sigma && sigma_collision_possible(exps);
        if (!risky) {
            std::vector<uint64_t> chosen;
            return val_rec(0, T, 1.0, 0, chosen);
        }
        std::vector<u128> values;
        std::vector<uint64_t> chosen;
        collect_rec(0, T, u128{1}, 0, chosen, values);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        long double sum = 0.0L;
        for (u128 v : values)
            sum += powl(static_cast<long double>(v),
                        -static_cast<long double>(inv_alpha));
        return static_cast<double>(sum);
    }

    size_t next_start(size_t i, size_t idx) const {
        if (i + 1 < exps.size() && exps[i + 1] == exps[i])
            return mode == Mode::Pi ? idx + 1 : idx;
        return 0;
    }

    double val_rec(size_t i, u128 budget, double coeff, size_t start_idx,
                   std::vector<uint64_t>& chosen) {
        const auto& P = t.primes();
        if (i + 1 == exps.size()) {
            uint64_t bound = last_slot_bound(budget);
            double sum = coeff * prefix.range(start_idx, bound);
            if (mode == Mode::Pi) {
                uint64_t lowest = start_idx < P.size() ? P[start_idx] : UINT64_MAX;
                for (uint64_t q : chosen)
                    if (q >= lowest && q <= bound)
                        sum -= coeff * std::pow(double(q), -s[i]);
            }
            return sum;
        }
        uint64_t pmax = nth_root_u128(budget / cross_min[i], exps[i]);
        if (pmax > t.limit())
            throw resource_error("series constant needs primes up to " +
                                     std::to_string(pmax),
                                 pmax);
        double sum = 0.0;
        for (size_t idx = start_idx; idx < P.size() && P[idx] <= pmax; ++idx) {
            uint64_t p = P[idx];
            if (mode == Mode::Pi &&
                std::find(chosen.begin(), chosen.end(), p) != chosen.end())
                continue;
            u128 pe = u128_pow_capped(p, exps[i], budget);
            if (pe > budget) break;
            chosen.push_back(p);
            sum += val_rec(i + 1, budget / pe, coeff * std::pow(double(p), -s[i]),
                           next_start(i, idx), chosen);
            chosen.pop_back();
        }
        return sum;
    }

    void collect_rec(size_t i, u128 budget, u128 value, size_t start_idx,
                     std::vector<uint64_t>& chosen, std::vector<u128>& out) {
        const auto& P = t.primes();
        uint64_t pmax = nth_root_u128(budget / cross_min[i], exps[i]);
        if (pmax > t.limit())
            throw resource_error("series constant needs primes up to " +
                                     std::to_string(pmax),
                                 pmax);
        for (size_t idx = start_idx; idx < P.size() && P[idx] <= pmax; ++idx) {
            uint64_t p = P[idx];
            if (mode == Mode::Pi &&
                std::find(chosen.begin(), chosen.end(), p) != chosen.end())
                continue;
            u128 pe = u128_pow_capped(p, exps[i], budget);
            if (pe > budget) break;
            if (i + 1 == exps.size()) {
                out.push_back(value * pe);
            } else {
                chosen.push_back(p);
                collect_rec(i + 1, budget / pe, value * pe, next_start(i, idx),
                            chosen, out);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

SeriesConstant series_constant(const ShapeSignature& signature, Mode mode,
                               double tolerance, const PrimeTable& table) {
    if (!(tolerance > 0.0)) throw domain_error("tolerance must be positive");
    double tol = std::max(tolerance, kToleranceFloor);
    if (signature.beta.empty()) return {1.0, 0.0, 0};
    if (signature.alpha == 0 || signature.k == 0)
        throw domain_error("series_constant: invalid signature");
    for (uint32_t b : signature.beta)
        if (b <= signature.alpha)
            throw domain_error("series_constant: beta entries must exceed alpha");

    size_t r = signature.beta.size();

    // Upper bound on the full constant as a product of prime zeta upper
    // brackets; its slack is part of the reported tail, so keep it small.
    double prod_up = 1.0;
    for (uint32_t b : signature.beta) {
        SeriesConstant f = prime_zeta(double(b) / signature.alpha,
                                      tol / (8.0 * double(r)), table);
        prod_up *= f.value + f.tail_bound;
    }

    BetaSeries series(table, signature.beta, signature.alpha, mode);

    // The truncation tail over values is bounded by the tail over
    // representations, which is the product upper bound minus the finite
    // representation sum. Grow T until that gap closes.
    u128 T = 1'000'000;
    double tail = 0.0;
    for (;;) {
        double rep = series.representation_sum(T);
        tail = std::max(0.0, prod_up - rep);
        if (tail <= tol) break;
        if (T > (u128{1} << 110))
            throw tolerance_error("series_constant: tolerance unachievable",
                                  tail);
        T *= 8;
    }

    double value = series.value_sum(T);
    uint64_t threshold =
        T > static_cast<u128>(UINT64_MAX) ? UINT64_MAX : static_cast<uint64_t>(T);
    return {value, tail, threshold};
}

SeriesConstant constant_as_product(const ShapeSignature& signature,
                                   double tolerance, const PrimeTable& table) {
    if (!(tolerance > 0.0)) throw domain_error("tolerance must be positive");
    double tol = std::max(tolerance, kToleranceFloor);
    if (signature.beta.empty()) return {1.0, 0.0, 0};
    if (!uniqueness_condition(signature.beta))
        throw domain_error(
            "constant_as_product: uniqueness condition fails; use "
            "series_constant");

    size_t r = signature.beta.size();

    // Rough pass to size the per-factor tolerance budget.
    std::vector<double> rough_up;
    for (uint32_t b : signature.beta) {
        SeriesConstant f =
            prime_zeta(double(b) / signature.alpha, 1e-4, table);
        rough_up.push_back(f.value + f.tail_bound + 1e-4);
    }
    double partial_max = 0.0;
    for (size_t i = 0; i < r; ++i) {
        double partial = 1.0;
        for (size_t j = 0; j < r; ++j)
            if (j != i) partial *= rough_up[j];
        partial_max = std::max(partial_max, partial);
    }
    double factor_tol = tol / (2.0 * double(r) * std::max(1.0, partial_max));

    double value = 1.0, upper = 1.0;
    uint64_t threshold = 0;
    for (uint32_t b : signature.beta) {
        SeriesConstant f =
            prime_zeta(double(b) / signature.alpha, factor_tol, table);
        value *= f.value;
        upper *= f.value + f.tail_bound;
        threshold = std::max(threshold, f.truncation_threshold);
    }
    double tail = std::max(0.0, upper - value);
    if (tail > tol)
        throw tolerance_error("constant_as_product: tolerance unachievable",
                              tail);
    return {value, tail, threshold};
}

}  // namespace shapecount
