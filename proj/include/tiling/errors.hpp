#ifndef TILING_ERRORS_HPP
#define TILING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tiling {

/// argument outside the domain of a product function (negative factorial etc.)
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// a vanishing factor in a denominator
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// region or formula parameters that do not describe a valid instance
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// region too wide for the frontier counter
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// malformed request (bad format name, bad flag value)
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace tiling

#endif
