#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emsum {

// Error categories. The CLI maps them onto stable exit codes:
// InputError -> 2, ResourceError -> 3, NumericalError -> 4.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimitive : InputError {
    using InputError::InputError;
};
struct NotRegular : InputError {
    using InputError::InputError;
};
struct NotSimple : InputError {
    using InputError::InputError;
};
struct NonIntegerVertex : InputError {
    using InputError::InputError;
};
struct Unbounded : InputError {
    using InputError::InputError;
};
struct InvalidPolytope : InputError {
    using InputError::InputError;
};
struct OrderTooLarge : InputError {
    using InputError::InputError;
};

// Expression parsing errors carry the byte offset of the offending token.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t off)
        : InputError(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct UnknownIdentifier : ParseError {
    using ParseError::ParseError;
};
struct ArityError : ParseError {
    using ParseError::ParseError;
};

// Polytope file loading errors name the offending line.
struct PolytopeFormatError : InputError {
    PolytopeFormatError(const std::string& msg, int ln)
        : InputError(msg + " (line " + std::to_string(ln) + ")"), line(ln) {}
    int line;
};

struct DomainError : NumericalError {
    using NumericalError::NumericalError;
};
struct ToleranceNotReached : NumericalError {
    ToleranceNotReached(const std::string& msg, double est)
        : NumericalError(msg + " (achieved error estimate " + std::to_string(est) + ")"),
          achieved(est) {}
    double achieved;
};
struct PartitionFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct TooManyPoints : ResourceError {
    TooManyPoints(unsigned long long needed, unsigned long long budget)
        : ResourceError("lattice enumeration exceeds point budget (needs > " +
                        std::to_string(needed) + ", budget " + std::to_string(budget) + ")") {}
};

}  // namespace emsum
