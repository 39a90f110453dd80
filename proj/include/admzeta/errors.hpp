#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace admzeta {

// Base for every failure raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied an argument outside the supported range (bad n, order, NaN, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Argument is well-formed but lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// z sits within the gate distance of a singular point.
// For a term 1/(r^z - 1) the singular points are 2*pi*i*k/log(r); base == 0 marks
// a pole that does not come from the term lattice (e.g. zeta at z = 1).
class PoleError : public DomainError {
public:
    PoleError(const std::string& what, std::uint64_t base, std::int64_t lattice_index)
        : DomainError(what), base_(base), lattice_index_(lattice_index) {}

    std::uint64_t base() const noexcept { return base_; }
    std::int64_t lattice_index() const noexcept { return lattice_index_; }

private:
    std::uint64_t base_;
    std::int64_t lattice_index_;
};

// The eta prefactor 1 - 2^(1-z) is (numerically) zero.
class SingularPrefactorError : public DomainError {
public:
    using DomainError::DomainError;
};

// A verification contour encloses or touches a pole.
class ContourError : public DomainError {
public:
    using DomainError::DomainError;
};

// Phase unwrapping along a contour was ambiguous at the requested sampling.
class ResolutionError : public Error {
public:
    using Error::Error;
};

}  // namespace admzeta
