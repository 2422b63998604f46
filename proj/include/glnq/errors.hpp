// errors.hpp -- exception types mapped to CLI exit codes by the front end.

#pragma once

#include <stdexcept>
#include <string>

namespace glnq {

// A configured limit was exceeded. Never silently truncates work.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or unsatisfiable configuration (bad q, no suitable prime, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Cache file unreadable or failed re-validation; caller should rebuild.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace glnq
