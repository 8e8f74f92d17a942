#include "shapecount/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "shapecount/asymptotics.hpp"
#include "shapecount/exact.hpp"

namespace shapecount {

namespace {

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

uint64_t parse_count_threshold(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    std::string s = text.substr(i, end - i);
    if (s.empty()) throw domain_error("empty threshold");

    size_t epos = s.find_first_of("eE");
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        try {
            size_t used = 0;
            exp10 = std::stol(s.substr(epos + 1), &used);
            if (used != s.size() - epos - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw domain_error("bad exponent in threshold '" + text + "'");
        }
    }

    size_t dot = mant.find('.');
    std::string digits = dot == std::string::npos
                             ? mant
                             : mant.substr(0, dot) + mant.substr(dot + 1);
    if (dot != std::string::npos)
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
        throw domain_error("bad threshold '" + text + "'");

    // strip trailing zeros into the exponent so "2.50e3" works
    while (exp10 < 0 && digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++exp10;
    }
    if (exp10 < 0) {
        if (digits == "0") return 0;
        throw domain_error("non-integral threshold '" + text + "'");
    }

    uint64_t v = 0;
    auto push_digit = [&](uint64_t d) {
        if (v > (UINT64_MAX - d) / 10)
            throw domain_error("threshold '" + text + "' overflows");
        v = v * 10 + d;
    };
    for (char c : digits) push_digit(uint64_t(c - '0'));
    for (long e = 0; e < exp10; ++e) push_digit(0);
    return v;
}

std::vector<uint64_t> parse_grid(const std::string& text) {
    std::vector<uint64_t> grid;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        grid.push_back(parse_count_threshold(tok));  // rejects empty tokens
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<ComparisonRow> run_comparison(const std::vector<uint64_t>& grid,
                                          const Shape& shape, Mode mode,
                                          double tolerance,
                                          const PrimeTable& table) {
    std::vector<uint64_t> xs = grid;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<ComparisonRow> rows;
    rows.reserve(xs.size());
    for (uint64_t x : xs) {
        ComparisonRow row;
        row.x = x;
        row.shape = shape;
        row.mode = mode;
        row.exact = count_shape(x, shape, mode, table).count;
        EstimateBreakdown est =
            estimate_count(double(x), shape, mode, tolerance, table);
        row.estimate = est.estimate;
        row.constant_value = est.constant.value;
        row.semi_exact = equivalent_form(double(x), shape, mode, tolerance, table);
        row.ratio_exact_over_estimate =
            row.estimate > 0 ? double(row.exact) / row.estimate : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "x,exact,estimate,semi_exact,ratio,constant,mode,shape\n";
    for (const auto& r : rows) {
        out << r.x << ',' << r.exact << ',' << fmt_real(r.estimate) << ','
            << fmt_real(r.semi_exact) << ','
            << fmt_real(r.ratio_exact_over_estimate) << ','
            << fmt_real(r.constant_value) << ',' << to_string(r.mode) << ",\""
            << to_string(r.shape) << "\"\n";
    }
}

void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["x"] = r.x;
        obj["exact"] = r.exact;
        obj["estimate"] = r.estimate;
        obj["semi_exact"] = r.semi_exact;
        obj["ratio"] = r.ratio_exact_over_estimate;
        obj["constant"] = r.constant_value;
        obj["mode"] = to_string(r.mode);
        obj["shape"] = to_string(r.shape);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace shapecount
