#pragma once

#include <stdexcept>
#include <string>

namespace fracsde {

/// Invalid mathematical input (negative time, H outside the open interval, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to reach its tolerance. Carries the error
/// estimate that was achieved before giving up.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}

    double achieved_error;
};

/// A combinatorial or resource guard tripped (degree caps, word-length caps).
class guard_error : public std::invalid_argument {
public:
    explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace fracsde
