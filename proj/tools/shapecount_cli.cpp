#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shapecount/asymptotics.hpp"
#include "shapecount/constants.hpp"
#include "shapecount/exact.hpp"
#include "shapecount/report.hpp"

namespace sc = shapecount;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitNumeric = 4;

sc::Mode parse_mode(const std::string& s) {
    if (s == "sigma") return sc::Mode::Sigma;
    if (s == "pi") return sc::Mode::Pi;
    throw sc::domain_error("mode must be 'sigma' or 'pi', got '" + s + "'");
}

uint64_t env_limit_override() {
    const char* v = std::getenv("SHAPECOUNT_LIMIT");
    if (!v || !*v) return 0;
    return sc::parse_count_threshold(v);
}

// Smallest sieve limit that lets the enumeration assign a prime to every
// slot: max over slots of (x / min-product-of-other-slots)^(1/e), plus 1.
uint64_t auto_limit(uint64_t x, const sc::Shape& shape) {
    uint64_t best = 3;
    for (size_t i = 0; i < shape.exponents.size(); ++i) {
        uint64_t other_bits = 0;
        for (size_t j = 0; j < shape.exponents.size(); ++j)
            if (j != i) other_bits += shape.exponents[j];
        uint64_t budget =
            other_bits >= 64 ? 0 : x >> other_bits;
        uint64_t r = sc::nth_root_floor(budget, shape.exponents[i]) + 1;
        best = std::max(best, r);
    }
    return std::min(best, sc::PrimeTable::kMaxLimit);
}

sc::PrimeTable build_table(uint64_t limit, uint64_t x) {
    uint64_t lpf = std::min<uint64_t>(sc::PrimeTable::kDefaultLpfLimit,
                                      std::max<uint64_t>(x, 100));
    return sc::PrimeTable::build(limit, lpf);
}

int run_count(const std::string& shape_text, const std::string& x_text,
              const std::string& mode_text, uint64_t limit_flag) {
    sc::Shape shape = sc::parse_shape(shape_text);
    sc::Mode mode = parse_mode(mode_text);
    uint64_t x = sc::parse_count_threshold(x_text);
    uint64_t limit = limit_flag ? limit_flag : env_limit_override();
    if (!limit) limit = auto_limit(x, shape);
    sc::PrimeTable table = build_table(limit, 2);
    std::cout << sc::count_shape(x, shape, mode, table).count << "\n";
    return 0;
}

int run_constant(const std::string& shape_text, const std::string& mode_text,
                 const std::string& beta_text, bool check_unique, double tol) {
    if (check_unique || !beta_text.empty()) {
        if (beta_text.empty())
            throw sc::domain_error("--check-unique requires --beta");
        sc::Shape beta = sc::parse_shape(beta_text);
        auto split = sc::find_equal_sum_split(beta.exponents);
        if (!split) {
            std::cout << "unique\n";
        } else {
            auto fmt = [](const std::vector<uint32_t>& v) {
                std::string s = "{";
                for (size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + std::to_string(v[i]);
                return s + "}";
            };
            std::cout << "not unique: " << fmt(split->first) << " vs "
                      << fmt(split->second) << "\n";
        }
        return 0;
    }

    sc::Shape shape = sc::parse_shape(shape_text);
    sc::Mode mode = parse_mode(mode_text);
    sc::ShapeSignature sig = sc::normalize(shape);

    bool product = mode == sc::Mode::Sigma &&
                   (sig.beta.empty() || sc::uniqueness_condition(sig.beta));

    // The truncation point is not known up front; grow the table on demand.
    uint64_t limit = 1'000'000;
    while (true) {
        sc::PrimeTable table = build_table(limit, 2);
        try {
            sc::SeriesConstant c;
            if (sig.beta.empty())
                c = {1.0, 0.0, 0};
            else if (product)
                c = sc::constant_as_product(sig, tol, table);
            else
                c = sc::series_constant(sig, mode, tol, table);
            std::ostringstream out;
            out.precision(10);
            out << "value " << c.value << "\n"
                << "tail_bound " << c.tail_bound << "\n"
                << "method " << (product ? "product" : "enumeration") << "\n";
            std::cout << out.str();
            return 0;
        } catch (const sc::resource_error& e) {
            uint64_t need = std::max(e.needed_limit, limit * 2);
            if (limit >= sc::PrimeTable::kMaxLimit) throw;
            limit = std::min(need, sc::PrimeTable::kMaxLimit);
        }
    }
}

int run_compare(const std::string& shape_text, const std::string& mode_text,
                const std::string& grid_text, const std::string& format,
                const std::string& out_path, double tol, uint64_t limit_flag) {
    sc::Shape shape = sc::parse_shape(shape_text);
    sc::Mode mode = parse_mode(mode_text);
    std::vector<uint64_t> grid = sc::parse_grid(grid_text);
    if (format != "csv" && format != "json")
        throw sc::domain_error("format must be 'csv' or 'json'");

    uint64_t xmax = grid.back();
    uint64_t limit = limit_flag ? limit_flag : env_limit_override();
    if (!limit) {
        sc::ShapeSignature sig = sc::normalize(shape);
        limit = std::max(auto_limit(xmax, shape),
                         sc::nth_root_floor(xmax, sig.alpha) + 1);
        // prime_zeta truncation for the constant's tail only needs sqrt(N)
        // worth of primes, which the auto limit already covers.
        limit = std::min(limit, sc::PrimeTable::kMaxLimit);
    }
    sc::PrimeTable table = build_table(limit, 2);

    std::vector<sc::ComparisonRow> rows =
        sc::run_comparison(grid, shape, mode, tol, table);

    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    if (format == "csv")
        sc::write_csv(out, rows);
    else
        sc::write_json(out, rows);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + out_path + "'");
    std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int run_prime_zeta(double s, double tol) {
    if (!(s > 1.0))
        throw sc::domain_error("prime zeta diverges for s <= 1");
    uint64_t n = sc::prime_zeta_truncation(s, tol);
    uint64_t limit =
        std::min<uint64_t>(std::max<uint64_t>(sc::isqrt_u64(n) + 1, 1000),
                           sc::PrimeTable::kMaxLimit);
    // streaming needs sqrt(N) of stored primes, but summation to N itself is
    // cheaper with the list materialized when N is small
    if (n <= 100'000'000) limit = std::max<uint64_t>(limit, n);
    sc::PrimeTable table = build_table(limit, 2);
    sc::SeriesConstant c = sc::prime_zeta(s, tol, table);
    std::ostringstream out;
    out.precision(10);
    out << "value " << c.value << "\n"
        << "tail_bound " << c.tail_bound << "\n";
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting integers whose prime factorization matches a "
                 "prescribed exponent shape"};
    app.require_subcommand(1);

    std::string shape_text, mode_text = "sigma", x_text, grid_text;
    std::string beta_text, format = "csv", out_path;
    double tol = 1e-9;
    double zeta_s = 0.0;
    double zeta_tol = 1e-10;
    uint64_t limit_flag = 0;
    bool check_unique = false;

    auto* count = app.add_subcommand("count", "Exact count up to x");
    count->add_option("--shape", shape_text)->required();
    count->add_option("--x", x_text)->required();
    count->add_option("--mode", mode_text)->required();
    count->add_option("--limit", limit_flag);

    auto* constant = app.add_subcommand("constant", "Series constant");
    constant->add_option("--shape", shape_text);
    constant->add_option("--mode", mode_text);
    constant->add_option("--beta", beta_text);
    constant->add_flag("--check-unique", check_unique);
    constant->add_option("--tol", tol);

    auto* compare = app.add_subcommand("compare", "Exact vs asymptotic report");
    compare->add_option("--shape", shape_text)->required();
    compare->add_option("--mode", mode_text)->required();
    compare->add_option("--x-grid", grid_text)->required();
    compare->add_option("--format", format);
    compare->add_option("--out", out_path)->required();
    compare->add_option("--tol", tol);
    compare->add_option("--limit", limit_flag);

    auto* pz = app.add_subcommand("prime-zeta", "Prime zeta function value");
    pz->add_option("--s", zeta_s)->required();
    pz->add_option("--tol", zeta_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed())
            return run_count(shape_text, x_text, mode_text, limit_flag);
        if (constant->parsed())
            return run_constant(shape_text, mode_text, beta_text, check_unique,
                                tol);
        if (compare->parsed())
            return run_compare(shape_text, mode_text, grid_text, format,
                               out_path, tol, limit_flag);
        if (pz->parsed()) return run_prime_zeta(zeta_s, zeta_tol);
    } catch (const sc::resource_error& e) {
        std::cerr << "error: " << e.what()
                  << " (needed sieve limit " << e.needed_limit
                  << "; raise --limit or SHAPECOUNT_LIMIT)\n";
        return kExitCapacity;
    } catch (const sc::tolerance_error& e) {
        std::cerr << "error: " << e.what() << " (achievable ~" << e.achievable
                  << ")\n";
        return kExitNumeric;
    } catch (const sc::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
