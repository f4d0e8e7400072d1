#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyperm/errors.hpp"

namespace polyperm {

struct PrimePower {
    std::uint32_t p;
    std::uint32_t k;

    bool operator==(const PrimePower&) const = default;
    auto operator<=>(const PrimePower&) const = default;
};

/// A modulus n >= 2 together with its prime factorization, primes strictly
/// increasing. The factorization is recomputed (or validated) on construction.
class RingSpec {
public:
    explicit RingSpec(std::uint32_t n);
    RingSpec(std::uint32_t n, std::vector<PrimePower> factors);

    std::uint32_t modulus() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool squarefree() const;
    bool is_prime_power() const { return factors_.size() == 1; }

    static bool is_prime(std::uint32_t m);

private:
    std::uint32_t n_;
    std::vector<PrimePower> factors_;
};

/// Polynomial over Z/n as a coefficient sequence, constant term first.
/// This is the syntactic object: equality compares coefficient sequences, not
/// induced functions. Trailing zeros are permitted; canonical() strips them.
class ResiduePoly {
public:
    /// Coefficients must already lie in [0, n); throws otherwise.
    ResiduePoly(std::uint32_t n, std::vector<std::uint32_t> coeffs);

    /// Reduces arbitrary integers into [0, n) first.
    static ResiduePoly from_integers(std::uint32_t n, const std::vector<long long>& coeffs);

    std::uint32_t modulus() const { return n_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    /// Largest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;

    /// Copy with trailing zero coefficients stripped.
    ResiduePoly canonical() const;

    bool operator==(const ResiduePoly&) const = default;

    ResiduePoly operator+(const ResiduePoly& rhs) const;
    ResiduePoly operator*(const ResiduePoly& rhs) const;

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> coeffs_;
};

/// Evaluation table of a function Z/n -> Z/n; entry x is f(x). This is the
/// semantic object: two polynomials induce the same function iff their tables
/// are equal.
class FunctionTable {
public:
    FunctionTable(std::uint32_t n, std::vector<std::uint32_t> images);

    std::uint32_t modulus() const { return n_; }
    const std::vector<std::uint32_t>& images() const { return images_; }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }

    bool is_bijective() const;

    bool operator==(const FunctionTable&) const = default;
    bool operator<(const FunctionTable& rhs) const;

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> images_;
};

/// Horner evaluation of f at x; x must lie in [0, n).
std::uint32_t eval_poly(const ResiduePoly& f, std::uint32_t x);

FunctionTable poly_to_table(const ResiduePoly& f);

/// True iff the induced evaluation map is a bijection of Z/n.
bool is_permutation_polynomial(const ResiduePoly& f);

/// Termwise derivative sum(i * a_i * x^(i-1)), coefficients reduced mod n.
ResiduePoly formal_derivative(const ResiduePoly& f);

/// Largest d >= 1 such that the tables of x, x^2, ..., x^d are pairwise
/// distinct. This is an upper bound for the degree needed to represent any
/// polynomial function on Z/n. The search is capped at
/// n * (largest exponent in the factorization of n) + 2; the cap is a safety
/// bound and is not reached for any tested modulus.
std::uint32_t pfb_upper_bound(std::uint32_t n);

/// Parses either monomial form "x^3+6x^2+x" or coefficient-list form
/// "[0,1,6,1]" (constant term first). Coefficient literals must lie in
/// [0, n); use ResiduePoly::from_integers to reduce out-of-range input.
ResiduePoly parse_poly(const std::string& text, std::uint32_t n);

/// Monomial form, descending powers, e.g. "x^3+6x^2+x"; "0" for the zero
/// polynomial.
std::string format_poly(const ResiduePoly& f);

/// Coefficient-list form "[a0,a1,...]".
std::string format_coeff_list(const ResiduePoly& f);

}  // namespace polyperm
