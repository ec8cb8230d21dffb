#pragma once

#include <stdexcept>
#include <string>

namespace lnmeans {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A sample value is <= 0, so its logarithm is undefined.
class NonPositiveValue : public Error {
public:
    explicit NonPositiveValue(const std::string& what) : Error(what) {}
};

// Fewer than two observations in a group.
class SampleTooSmall : public Error {
public:
    explicit SampleTooSmall(const std::string& what) : Error(what) {}
};

// Chi-square degrees of freedom below 1.
class InvalidDf : public Error {
public:
    explicit InvalidDf(const std::string& what) : Error(what) {}
};

// A finite result cannot be represented, or an argument lies outside
// its admissible range.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// A log-scale variance of zero: the test statistic's denominator
// vanishes and the comparison is not identifiable.
class DegenerateVariance : public Error {
public:
    explicit DegenerateVariance(const std::string& what) : Error(what) {}
};

// Monte Carlo or experiment settings that violate their contract.
class InvalidSettings : public Error {
public:
    explicit InvalidSettings(const std::string& what) : Error(what) {}
};

// Malformed input file or flag value. The message names the offending
// row or field.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace lnmeans
