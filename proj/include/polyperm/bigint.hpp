#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyperm {

/// Exact arbitrary-precision integer. All group orders and counts are exact;
/// nothing in this library uses floating point.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);

/// base^exp by binary exponentiation.
BigInt big_pow(BigInt base, std::uint64_t exp);

}  // namespace polyperm
