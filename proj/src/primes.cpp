#include "shapecount/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shapecount {

uint64_t Factorization::value() const {
    uint64_t v = 1;
    for (auto [p, e] : factors)
        for (uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

std::vector<uint32_t> Factorization::exponents() const {
    std::vector<uint32_t> out;
    out.reserve(factors.size());
    for (auto [p, e] : factors) out.push_back(e);
    return out;
}

uint64_t isqrt_u64(uint64_t n) {
    constexpr uint64_t kMaxRoot = 4294967295ull;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r > kMaxRoot) r = kMaxRoot;
    while (r > 0 && r * r > n) --r;
    while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

constexpr uint64_t kSegmentSize = 1 << 21;

// Primes up to limit by a plain sieve; used for base primes only.
std::vector<uint64_t> base_sieve(uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

// Mark composites in [lo, hi] into mark (mark[i] corresponds to lo+i).
void sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint64_t>& base,
                   std::vector<char>& mark) {
    std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 0);
    if (lo == 0) {
        mark[0] = 1;
        if (hi >= 1) mark[1] = 1;
    } else if (lo == 1) {
        mark[0] = 1;
    }
    for (uint64_t p : base) {
        if (p * p > hi) break;
        uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (uint64_t j = start; j <= hi; j += p) mark[j - lo] = 1;
    }
}

}  // namespace

PrimeTable PrimeTable::build(uint64_t limit, uint64_t lpf_limit) {
    if (limit < 2) throw domain_error("sieve limit must be at least 2");
    if (limit > kMaxLimit)
        throw resource_error("sieve limit exceeds the memory budget (" +
                                 std::to_string(kMaxLimit) + ")",
                             limit);

    PrimeTable t;
    t.limit_ = limit;
    t.lpf_limit_ = std::min(lpf_limit, limit);

    auto base = base_sieve(std::max<uint64_t>(isqrt_u64(limit), 2));

    uint64_t nseg = (limit + 1 + kSegmentSize - 1) / kSegmentSize;
    std::vector<std::vector<uint64_t>> found(nseg);

#pragma omp parallel for schedule(dynamic)
    for (int64_t s = 0; s < static_cast<int64_t>(nseg); ++s) {
        uint64_t lo = static_cast<uint64_t>(s) * kSegmentSize;
        uint64_t hi = std::min(lo + kSegmentSize - 1, limit);
        std::vector<char> mark(kSegmentSize);
        sieve_segment(lo, hi, base, mark);
        auto& out = found[s];
        for (uint64_t i = lo; i <= hi; ++i)
            if (!mark[i - lo]) out.push_back(i);
    }

    size_t total = 0;
    for (auto& v : found) total += v.size();
    t.primes_.reserve(total);
    for (auto& v : found) t.primes_.insert(t.primes_.end(), v.begin(), v.end());

    // Least prime factor by linear sieve.
    if (t.lpf_limit_ >= 2) {
        t.lpf_.assign(t.lpf_limit_ + 1, 0);
        std::vector<uint32_t> small;
        for (uint64_t i = 2; i <= t.lpf_limit_; ++i) {
            if (t.lpf_[i] == 0) {
                t.lpf_[i] = static_cast<uint32_t>(i);
                small.push_back(static_cast<uint32_t>(i));
            }
            for (uint32_t p : small) {
                if (p > t.lpf_[i] || i * p > t.lpf_limit_) break;
                t.lpf_[i * p] = p;
            }
        }
    }
    return t;
}

uint32_t PrimeTable::least_prime_factor(uint64_t n) const {
    if (n < 2 || n > lpf_limit_)
        throw domain_error("least_prime_factor: n out of table range");
    return lpf_[n];
}

Factorization PrimeTable::factorize(uint64_t n) const {
    if (n < 2) throw domain_error("factorize: n must be at least 2");
    if (n > lpf_limit_)
        throw resource_error("factorize: n exceeds the lpf table (" +
                                 std::to_string(lpf_limit_) + ")",
                             n);
    Factorization f;
    while (n > 1) {
        uint64_t p = lpf_[n];
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

uint64_t PrimeTable::prime_count(double y) const {
    if (y < 0) throw domain_error("prime_count: negative argument");
    if (y > static_cast<double>(limit_))
        throw domain_error("prime_count: argument beyond table limit");
    if (y < 2) return 0;
    return prime_count_u64(static_cast<uint64_t>(std::floor(y)));
}

uint64_t PrimeTable::prime_count_u64(uint64_t y) const {
    if (y > limit_)
        throw resource_error("prime_count: argument beyond table limit", y);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), y);
    return static_cast<uint64_t>(it - primes_.begin());
}

PrimePowerSum PrimeTable::sum_prime_powers(double s, uint64_t n) const {
    long double sum = 0.0L;
    uint64_t count = 0;

    uint64_t stored_hi = std::min(n, limit_);
    size_t nstored = static_cast<size_t>(prime_count_u64(stored_hi));

#pragma omp parallel for schedule(static) reduction(+ : sum, count)
    for (int64_t i = 0; i < static_cast<int64_t>(nstored); ++i) {
        sum += powl(static_cast<long double>(primes_[i]), -static_cast<long double>(s));
        ++count;
    }

    if (n > limit_) {
        uint64_t root = isqrt_u64(n);
        if (root > limit_)
            throw resource_error(
                "sum_prime_powers: need base primes up to sqrt(n)", root + 1);
        uint64_t lo0 = limit_ + 1;
        uint64_t nseg = (n - lo0) / kSegmentSize + 1;

#pragma omp parallel reduction(+ : sum, count)
        {
            std::vector<char> mark(kSegmentSize);
#pragma omp for schedule(dynamic)
            for (int64_t seg = 0; seg < static_cast<int64_t>(nseg); ++seg) {
                uint64_t lo = lo0 + static_cast<uint64_t>(seg) * kSegmentSize;
                uint64_t hi = std::min(lo + kSegmentSize - 1, n);
                sieve_segment(lo, hi, primes_, mark);
                for (uint64_t i = lo; i <= hi; ++i) {
                    if (!mark[i - lo]) {
                        sum += powl(static_cast<long double>(i),
                                    -static_cast<long double>(s));
                        ++count;
                    }
                }
            }
        }
    }
    return {sum, count};
}

std::vector<uint64_t> PrimeTable::primes_in(uint64_t lo, uint64_t hi) const {
    std::vector<uint64_t> out;
    if (hi < lo) return out;
    uint64_t stored_hi = std::min(hi, limit_);
    if (lo <= stored_hi) {
        auto b = std::lower_bound(primes_.begin(), primes_.end(), lo);
        auto e = std::upper_bound(primes_.begin(), primes_.end(), stored_hi);
        out.assign(b, e);
    }
    if (hi > limit_) {
        uint64_t root = isqrt_u64(hi);
        if (root > limit_)
            throw resource_error("primes_in: need base primes up to sqrt(hi)",
                                 root + 1);
        uint64_t start = std::max(lo, limit_ + 1);
        std::vector<char> mark(kSegmentSize);
        for (uint64_t seg_lo = start; seg_lo <= hi; seg_lo += kSegmentSize) {
            uint64_t seg_hi = std::min(seg_lo + kSegmentSize - 1, hi);
            sieve_segment(seg_lo, seg_hi, primes_, mark);
            for (uint64_t i = seg_lo; i <= seg_hi; ++i)
                if (!mark[i - seg_lo]) out.push_back(i);
        }
    }
    return out;
}

}  // namespace shapecount
