#pragma once
#include <stdexcept>

namespace svakit {

// Bad run parameters (unknown field values, out-of-range years). CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or insufficient input data (malformed records, empty slices). CLI exit code 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace svakit
