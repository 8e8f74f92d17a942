#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "shapecount/report.hpp"

using namespace shapecount;

namespace {

const PrimeTable& table() {
    static PrimeTable t = PrimeTable::build(2'000'000, 100);
    return t;
}

}  // namespace

TEST_CASE("threshold parsing accepts scientific-notation integers") {
    CHECK(parse_count_threshold("100") == 100);
    CHECK(parse_count_threshold("1e8") == 100'000'000);
    CHECK(parse_count_threshold("2.5e3") == 2500);
    CHECK(parse_count_threshold(" 1E6 ") == 1'000'000);
    CHECK(parse_count_threshold("0") == 0);
    CHECK(parse_count_threshold("18446744073709551615") == UINT64_MAX);
    CHECK_THROWS_AS(parse_count_threshold("1.5"), domain_error);
    CHECK_THROWS_AS(parse_count_threshold("2.51e1"), domain_error);
    CHECK_THROWS_AS(parse_count_threshold(""), domain_error);
    CHECK_THROWS_AS(parse_count_threshold("abc"), domain_error);
    CHECK_THROWS_AS(parse_count_threshold("1e20"), domain_error);
    CHECK_THROWS_AS(parse_count_threshold("-5"), domain_error);
}

TEST_CASE("grid parsing") {
    CHECK(parse_grid("1e4,1e6,1e8") ==
          std::vector<uint64_t>{10'000, 1'000'000, 100'000'000});
    CHECK(parse_grid("1e6,1e4") == std::vector<uint64_t>{10'000, 1'000'000});
    CHECK(parse_grid("100,100") == std::vector<uint64_t>{100});
    CHECK_THROWS_AS(parse_grid("1e4,,"), domain_error);
    CHECK_THROWS_AS(parse_grid(""), domain_error);
}

TEST_CASE("csv layout") {
    auto rows = run_comparison({1'000, 10'000}, parse_shape("1,3"), Mode::Pi,
                               1e-9, table());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].x == 1000);
    CHECK(rows[0].exact == 44);
    CHECK(rows[1].exact == 312);

    std::ostringstream out;
    write_csv(out, rows);
    std::string text = out.str();
    CHECK(text.rfind("x,exact,estimate,semi_exact,ratio,constant,mode,shape\n",
                     0) == 0);
    CHECK(text.find("1000,44,") != std::string::npos);
    CHECK(text.find(",pi,\"1,3\"\n") != std::string::npos);
}

TEST_CASE("csv output is deterministic") {
    auto rows = run_comparison({1'000, 10'000}, parse_shape("1,2"), Mode::Sigma,
                               1e-9, table());
    std::ostringstream a, b;
    write_csv(a, rows);
    write_csv(b, run_comparison({10'000, 1'000}, parse_shape("1,2"),
                                Mode::Sigma, 1e-9, table()));
    CHECK(a.str() == b.str());
}

TEST_CASE("json round trip") {
    auto rows =
        run_comparison({10'000}, parse_shape("1,3"), Mode::Sigma, 1e-9, table());
    std::ostringstream out;
    write_json(out, rows);
    auto parsed = nlohmann::json::parse(out.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["x"].get<uint64_t>() == rows[0].x);
    CHECK(parsed[0]["exact"].get<uint64_t>() == rows[0].exact);
    CHECK(parsed[0]["estimate"].get<double>() ==
          doctest::Approx(rows[0].estimate).epsilon(1e-12));
    CHECK(parsed[0]["ratio"].get<double>() ==
          doctest::Approx(rows[0].ratio_exact_over_estimate).epsilon(1e-12));
    CHECK(parsed[0]["mode"] == "sigma");
    CHECK(parsed[0]["shape"] == "1,3");
}

TEST_CASE("ratio is exact over estimate") {
    auto rows =
        run_comparison({100'000}, parse_shape("1,1"), Mode::Pi, 1e-9, table());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].ratio_exact_over_estimate ==
          doctest::Approx(double(rows[0].exact) / rows[0].estimate));
    CHECK(rows[0].constant_value == 1.0);
}
