#pragma once

#include <stdexcept>
#include <string>

namespace pcmq {

// Bad caller input: wrong dimensions, out-of-range parameters.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent data read from a file or stream.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A correlation coefficient is undefined because one series has zero variance.
class UndefinedCorrelation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The class-binning procedure cannot produce strictly increasing boundaries.
class PartitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcmq
