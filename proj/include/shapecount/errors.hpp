#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shapecount {

// An operation needs primes beyond what the table can provide.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, uint64_t needed_limit)
        : std::runtime_error(what), needed_limit(needed_limit) {}

    uint64_t needed_limit;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested tolerance cannot be met within the available resources.
class tolerance_error : public std::runtime_error {
public:
    tolerance_error(const std::string& what, double achievable)
        : std::runtime_error(what), achievable(achievable) {}

    double achievable;
};

}  // namespace shapecount
