#include "shapecount/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>

#include "shapecount/constants.hpp"

namespace shapecount {

namespace {

// Does p^e exceed y? Overflow-safe.
bool pow_exceeds(uint64_t p, uint32_t e, uint64_t y) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (p != 0 && r > y / p) return true;
        r *= p;
    }
    return r > y;
}

// p^e, or cap+1 if it would exceed cap. cap must be below UINT64_MAX.
uint64_t ipow_capped(uint64_t p, uint32_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (p != 0 && r > cap / p) return cap + 1;
        r *= p;
    }
    return r;
}

}  // namespace

uint64_t nth_root_floor(uint64_t y, uint32_t e) {
    if (e == 0) throw domain_error("nth_root_floor: exponent must be positive");
    if (e == 1) return y;
    if (y == 0) return 0;
    if (e >= 64) return 1;  // y < 2^64 <= 2^e
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(y), 1.0 / e));
    while (r > 0 && pow_exceeds(r, e, y)) --r;
    while (!pow_exceeds(r + 1, e, y)) ++r;
    return r;
}

namespace {

// Shared recursion for sigma_k (nondecreasing tuples) and pi_k (strictly
// increasing tuples). The last slot is resolved by prime counting.
uint64_t count_k_tuples(uint64_t x, uint32_t k, bool distinct,
                        const PrimeTable& t) {
    if (k == 0) throw domain_error("k must be positive");
    if (x < 2) return 0;
    const auto& P = t.primes();

    std::function<uint64_t(uint32_t, uint64_t, size_t)> rec =
        [&](uint32_t slots, uint64_t budget, size_t min_idx) -> uint64_t {
        if (slots == 1) {
            uint64_t hi = t.prime_count_u64(budget);
            return hi > min_idx ? hi - min_idx : 0;
        }
        uint64_t pmax = nth_root_floor(budget, slots);
        if (pmax > t.limit())
            throw resource_error("count_k: needs primes up to " +
                                     std::to_string(pmax),
                                 pmax);
        uint64_t sum = 0;
        for (size_t i = min_idx; i < P.size() && P[i] <= pmax; ++i)
            sum += rec(slots - 1, budget / P[i], distinct ? i + 1 : i);
        return sum;
    };
    return rec(k, x, 0);
}

// Enumeration plan for one shape: exponents sorted descending, grouped by
// equal value so that in-group canonical ordering removes permutations.
struct Plan {
    const PrimeTable& t;
    Mode mode;
    bool collect;                     // materialize values instead of counting
    std::vector<uint32_t> exps;       // descending
    std::vector<uint32_t> group_rem;  // slots left in the group from i on
    std::vector<uint64_t> cross_min;  // min product of slots after i's group

    Plan(const PrimeTable& table, Mode m, std::vector<uint32_t> e, bool coll)
        : t(table), mode(m), collect(coll), exps(std::move(e)) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        size_t n = exps.size();
        group_rem.assign(n, 1);
        for (size_t i = n; i-- > 0;)
            if (i + 1 < n && exps[i + 1] == exps[i])
                group_rem[i] = group_rem[i + 1] + 1;
        cross_min.assign(n, 1);
        for (size_t i = 0; i < n; ++i) {
            uint64_t bits = 0;
            for (size_t j = i + group_rem[i]; j < n; ++j) bits += exps[j];
            cross_min[i] = bits >= 64 ? UINT64_MAX : (uint64_t{1} << bits);
        }
    }

    uint64_t slot_pmax(size_t i, uint64_t budget) const {
        if (cross_min[i] == UINT64_MAX) return 0;
        uint64_t eff = budget / cross_min[i];
        uint64_t e = uint64_t{1} * exps[i] * group_rem[i];
        if (e >= 64) return eff >= 1 ? 1 : 0;
        return nth_root_floor(eff, static_cast<uint32_t>(e));
    }

    size_t next_start(size_t i, size_t idx) const {
        if (i + 1 < exps.size() && exps[i + 1] == exps[i])
            return mode == Mode::Pi ? idx + 1 : idx;
        return 0;
    }
};

void plan_recurse(const Plan& pl, size_t i, uint64_t budget, uint64_t value,
                  size_t start_idx, std::vector<uint64_t>& chosen,
                  uint64_t& count, std::vector<uint64_t>& values) {
    const auto& P = pl.t.primes();
    bool last = (i + 1 == pl.exps.size());

    // Closed innermost level: exponent-1 slot resolved by prime counting.
    if (last && pl.exps[i] == 1 && !pl.collect) {
        uint64_t hi = pl.t.prime_count_u64(budget);
        if (hi <= start_idx) return;
        uint64_t cnt = hi - start_idx;
        if (pl.mode == Mode::Pi) {
            uint64_t lowest = start_idx < P.size() ? P[start_idx] : UINT64_MAX;
            for (uint64_t q : chosen)
                if (q >= lowest && q <= budget) --cnt;
        }
        count += cnt;
        return;
    }

    uint64_t pmax = pl.slot_pmax(i, budget);
    if (pmax > pl.t.limit())
        throw resource_error(
            "count_shape: needs primes up to " + std::to_string(pmax), pmax);
    for (size_t idx = start_idx; idx < P.size() && P[idx] <= pmax; ++idx) {
        uint64_t p = P[idx];
        if (pl.mode == Mode::Pi &&
            std::find(chosen.begin(), chosen.end(), p) != chosen.end())
            continue;
        uint64_t pe = ipow_capped(p, pl.exps[i], budget);
        if (pe > budget) continue;
        if (last) {
            if (pl.collect)
                values.push_back(value * pe);
            else
                ++count;
        } else {
            chosen.push_back(p);
            plan_recurse(pl, i + 1, budget / pe, value * pe,
                         pl.next_start(i, idx), chosen, count, values);
            chosen.pop_back();
        }
    }
}

// Runs the enumeration with the first slot's prime choices distributed over
// threads. Branch costs are heavily skewed toward small primes, hence the
// dynamic schedule.
void run_plan(const Plan& pl, uint64_t x, uint64_t& count,
              std::vector<uint64_t>& values) {
    count = 0;
    values.clear();
    if (x < 2) return;
    const auto& P = pl.t.primes();

    if (pl.exps.size() == 1 && pl.exps[0] == 1 && !pl.collect) {
        count = pl.t.prime_count_u64(x);
        return;
    }

    uint64_t pmax0 = pl.slot_pmax(0, x);
    if (pmax0 > pl.t.limit())
        throw resource_error(
            "count_shape: needs primes up to " + std::to_string(pmax0), pmax0);
    int64_t n0 = static_cast<int64_t>(pl.t.prime_count_u64(pmax0));

    std::atomic<bool> failed{false};
    std::exception_ptr eptr = nullptr;

#pragma omp parallel
    {
        uint64_t local_count = 0;
        std::vector<uint64_t> local_values;
        std::vector<uint64_t> chosen;
#pragma omp for schedule(dynamic)
        for (int64_t i0 = 0; i0 < n0; ++i0) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                uint64_t p = P[i0];
                uint64_t pe = ipow_capped(p, pl.exps[0], x);
                if (pe > x) continue;
                if (pl.exps.size() == 1) {
                    if (pl.collect)
                        local_values.push_back(pe);
                    else
                        ++local_count;
                } else {
                    chosen.assign(1, p);
                    plan_recurse(pl, 1, x / pe, pe,
                                 pl.next_start(0, static_cast<size_t>(i0)),
                                 chosen, local_count, local_values);
                }
            } catch (...) {
#pragma omp critical(run_plan_error)
                {
                    if (!eptr) eptr = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
#pragma omp critical(run_plan_merge)
        {
            count += local_count;
            values.insert(values.end(), local_values.begin(),
                          local_values.end());
        }
    }
    if (eptr) std::rethrow_exception(eptr);
}

}  // namespace

uint64_t count_sigma_k(uint64_t x, uint32_t k, const PrimeTable& table) {
    return count_k_tuples(x, k, false, table);
}

uint64_t count_pi_k(uint64_t x, uint32_t k, const PrimeTable& table) {
    return count_k_tuples(x, k, true, table);
}

CountResult count_shape(uint64_t x, const Shape& shape, Mode mode,
                        const PrimeTable& table) {
    ShapeSignature sig = normalize(shape);  // validates
    (void)sig;
    bool dedup = mode == Mode::Sigma && sigma_collision_possible(shape.exponents);
    Plan pl(table, mode, shape.exponents, dedup);

    uint64_t count = 0;
    std::vector<uint64_t> values;
    run_plan(pl, x, count, values);
    if (dedup) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        count = values.size();
    }
    return {x, shape, mode, count};
}

std::vector<uint64_t> enumerate_beta(uint64_t limit,
                                     const std::vector<uint32_t>& beta,
                                     Mode mode, const PrimeTable& table) {
    if (beta.empty()) throw domain_error("enumerate_beta: beta must be nonempty");
    for (uint32_t e : beta)
        if (e == 0) throw domain_error("enumerate_beta: entries must be positive");
    Plan pl(table, mode, beta, true);
    uint64_t count = 0;
    std::vector<uint64_t> values;
    run_plan(pl, limit, count, values);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

BoundsPair hyperbola_bounds(uint64_t x, const Shape& shape,
                            const PrimeTable& table) {
    ShapeSignature sig = normalize(shape);
    if (sig.beta.empty())
        throw domain_error(
            "hyperbola_bounds: beta is empty, the bounds reduce to the count");
    BoundsPair b;
    for (uint64_t m : enumerate_beta(x, sig.beta, Mode::Sigma, table)) {
        uint64_t y = nth_root_floor(x / m, sig.alpha);
        b.lower += count_pi_k(y, sig.k, table);
        b.upper += count_sigma_k(y, sig.k, table);
    }
    return b;
}

}  // namespace shapecount
