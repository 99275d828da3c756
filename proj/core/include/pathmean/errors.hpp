#pragma once

#include <stdexcept>
#include <string>

namespace pathmean {

/// Numerical-domain violation (e.g. a matrix outside the principal log radius).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scalar argument outside its admissible range (e.g. time t outside [0,1]).
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& msg) : std::out_of_range(msg) {}
};

/// Structural argument violation (incompatible grids, bad sizes).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Two objects built over different group contexts were combined.
class ContextMismatch : public std::invalid_argument {
public:
    explicit ContextMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace pathmean
