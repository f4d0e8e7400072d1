#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "polyperm/bigint.hpp"

namespace polyperm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: polynomials, cycle notation, numeric fields.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operands of incompatible size or modulus.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// An enumerative operation would exceed its resource gate.
class GateExceeded : public Error {
public:
    using Error::Error;
};

/// A permutation does not respect the congruence classes of the target modulus.
class NotReducible : public Error {
public:
    using Error::Error;
};

/// The closed-form count was requested outside its hypothesis p >= k.
/// Carries the (inapplicable) formula value so callers can still report it.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& msg, BigInt value)
        : Error(msg), formula_value(std::move(value)) {}

    BigInt formula_value;
};

}  // namespace polyperm
