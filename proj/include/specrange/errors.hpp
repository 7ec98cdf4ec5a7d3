#pragma once

#include <stdexcept>
#include <string>

namespace specrange {

// Argument outside the mathematical domain of an operation (sigma out of
// range, empty alphabet, N below a diagonal entry, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Inconsistent lengths or band structure.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Iterative numerics failed to converge, or a file could not be written.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A value object was handed data that breaks its invariant.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace specrange
