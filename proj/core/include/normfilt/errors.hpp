#pragma once

#include <stdexcept>
#include <string>

namespace normfilt {

/// Two objects that must live in the same polynomial ring do not.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                " variables, got " + std::to_string(actual)) {}
};

/// Length of R/J requested for an ideal J that is not m-primary.
class NotMPrimary : public std::domain_error {
public:
    explicit NotMPrimary(const std::string& what)
        : std::domain_error("ideal is not m-primary (infinite colength): " + what) {}
};

} // namespace normfilt
