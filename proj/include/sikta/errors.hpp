#pragma once

#include <stdexcept>
#include <string>

namespace sikta {

// Bad or missing configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unrecoverable data problem (integrity violations, broken joins).
// The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Metric called with an empty reference after normalization.
class EmptyReferenceError : public DataError {
public:
    explicit EmptyReferenceError(const std::string& msg) : DataError(msg) {}
};

} // namespace sikta
