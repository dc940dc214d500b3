#pragma once

#include <stdexcept>
#include <string>

namespace hfsm {

// Error taxonomy shared by all modules. The CLI maps these onto process
// exit codes (usage=2, data/schema=3, numeric=4).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file contents: ragged rows, unparseable numbers.
class ParseError : public Error {
public:
    using Error::Error;
};

// Column-role mismatches: missing columns, wrong feature names.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Values that violate the data contract: non-binary outcome, missing cell.
class DataError : public Error {
public:
    using Error::Error;
};

// Invalid configuration: bad fold count, kernel spec without weights.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Conformance failures between matrices/vectors.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Metric undefined on the given inputs (single-class labels, zero expected).
class MetricError : public Error {
public:
    using Error::Error;
};

// Numeric failure inside the solver (non-finite objective, divide by zero).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace hfsm
