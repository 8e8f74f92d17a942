// Times the serial reference implementations against the OpenMP kernels and
// prints one CSV row per (kernel, n) pair.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "shapecount/exact.hpp"
#include "shapecount/primes.hpp"
#include "shapecount/reference.hpp"

namespace sc = shapecount;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* kernel, uint64_t n, double serial_ms, double par_ms) {
    std::printf("%s,%llu,%.2f,%.2f,%.2f\n", kernel,
                static_cast<unsigned long long>(n), serial_ms, par_ms,
                par_ms > 0 ? serial_ms / par_ms : 0.0);
}

}  // namespace

int main() {
    std::printf("kernel,n,serial_ms,parallel_ms,speedup\n");

    for (uint64_t n : {uint64_t{10'000'000}, uint64_t{100'000'000}}) {
        std::vector<uint64_t> a, b;
        double s = time_ms([&] { a = sc::ref::simple_sieve(n); });
        double p = time_ms([&] {
            b = sc::PrimeTable::build(n, 100).primes();
        });
        if (a != b) {
            std::fprintf(stderr, "sieve mismatch at n=%llu\n",
                         static_cast<unsigned long long>(n));
            return 1;
        }
        row("sieve", n, s, p);
    }

    {
        uint64_t n = 100'000'000;
        sc::PrimeTable table = sc::PrimeTable::build(n, 100);
        long double sa = 0, sb = 0;
        double s = time_ms([&] { sa = sc::ref::sum_prime_powers(table, 2.0, n); });
        double p = time_ms([&] { sb = table.sum_prime_powers(2.0, n).sum; });
        if (std::fabs(static_cast<double>(sa - sb)) > 1e-12) {
            std::fprintf(stderr, "prime power sum mismatch\n");
            return 1;
        }
        row("prime_power_sum", n, s, p);
    }

    {
        uint64_t x = 3'000'000;
        sc::Shape shape{{1, 1, 2}};
        sc::PrimeTable table = sc::PrimeTable::build(x, x);
        uint64_t ca = 0, cb = 0;
        double s = time_ms([&] {
            ca = sc::ref::count_by_membership(x, shape, sc::Mode::Sigma, table);
        });
        double p = time_ms([&] {
            cb = sc::count_shape(x, shape, sc::Mode::Sigma, table).count;
        });
        if (ca != cb) {
            std::fprintf(stderr, "count mismatch: %llu vs %llu\n",
                         static_cast<unsigned long long>(ca),
                         static_cast<unsigned long long>(cb));
            return 1;
        }
        row("count_1_1_2", x, s, p);
    }

    return 0;
}
