#include "shapecount/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace shapecount {

const char* to_string(Mode mode) {
    return mode == Mode::Sigma ? "sigma" : "pi";
}

namespace {

void validate(const Shape& shape) {
    if (shape.exponents.empty()) throw domain_error("shape must be nonempty");
    for (uint32_t e : shape.exponents)
        if (e == 0) throw domain_error("shape exponents must be positive");
}

}  // namespace

Shape parse_shape(std::string_view text) {
    Shape shape;
    std::string token;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        token.clear();
        for (size_t i = pos; i < comma; ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i])))
                token += text[i];
        if (token.empty())
            throw domain_error("shape: empty entry in \"" + std::string(text) + "\"");
        uint64_t v = 0;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw domain_error("shape: invalid entry \"" + token + "\"");
            v = v * 10 + static_cast<uint64_t>(c - '0');
            if (v > 1000000) throw domain_error("shape: exponent too large");
        }
        if (v == 0) throw domain_error("shape: exponents must be positive");
        shape.exponents.push_back(static_cast<uint32_t>(v));
        if (comma == text.size()) break;
        pos = comma + 1;
        if (pos == text.size())
            throw domain_error("shape: trailing comma in \"" + std::string(text) + "\"");
    }
    if (shape.exponents.empty()) throw domain_error("shape must be nonempty");
    return shape;
}

std::string to_string(const Shape& shape) {
    std::string out;
    for (size_t i = 0; i < shape.exponents.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(shape.exponents[i]);
    }
    return out;
}

ShapeSignature normalize(const Shape& shape) {
    validate(shape);
    std::vector<uint32_t> sorted = shape.exponents;
    std::sort(sorted.begin(), sorted.end());
    ShapeSignature sig;
    sig.alpha = sorted.front();
    size_t i = 0;
    while (i < sorted.size() && sorted[i] == sig.alpha) ++i;
    sig.k = static_cast<uint32_t>(i);
    sig.beta.assign(sorted.begin() + i, sorted.end());
    return sig;
}

namespace {

// Can `items` (descending) be partitioned into blocks exactly filling the
// remaining capacities in `targets`?
bool fill_targets(const std::vector<uint32_t>& items, size_t i,
                  std::vector<uint32_t>& targets) {
    if (i == items.size()) return true;
    uint32_t item = items[i];
    std::vector<uint32_t> tried;
    for (size_t j = 0; j < targets.size(); ++j) {
        if (targets[j] < item) continue;
        if (std::find(tried.begin(), tried.end(), targets[j]) != tried.end())
            continue;  // symmetric choice
        tried.push_back(targets[j]);
        targets[j] -= item;
        if (fill_targets(items, i + 1, targets)) {
            targets[j] += item;
            return true;
        }
        targets[j] += item;
    }
    return false;
}

}  // namespace

bool member(uint64_t n, const Shape& shape, Mode mode,
            const Factorization& factorization) {
    validate(shape);
    if (n < 2) {
        if (n == 0) throw domain_error("member: n must be positive");
        return false;
    }
    if (factorization.value() != n)
        throw domain_error("member: factorization does not match n");

    std::vector<uint32_t> nexp = factorization.exponents();
    std::sort(nexp.begin(), nexp.end(), std::greater<>());
    std::vector<uint32_t> sexp = shape.exponents;
    std::sort(sexp.begin(), sexp.end(), std::greater<>());

    if (mode == Mode::Pi) return nexp == sexp;

    uint64_t ssum = std::accumulate(sexp.begin(), sexp.end(), uint64_t{0});
    uint64_t nsum = std::accumulate(nexp.begin(), nexp.end(), uint64_t{0});
    if (ssum != nsum) return false;
    if (sexp.size() < nexp.size()) return false;
    return fill_targets(sexp, 0, nexp);
}

}  // namespace shapecount
