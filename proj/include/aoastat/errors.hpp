#pragma once

#include <stdexcept>
#include <string>

namespace aoastat {

/// Invalid parameters, options, or violated call preconditions.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Data-driven failures: unreadable input, degenerate series,
/// zero denominators, quadrature non-convergence.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aoastat
