#pragma once

#include <cstdint>
#include <string>

#include "polyperm/bigint.hpp"
#include "polyperm/carlitz.hpp"
#include "polyperm/perm.hpp"

namespace polyperm {

/// True iff f induces a well-defined permutation of Z/p^l for every l <= k.
/// Every polynomial permutation is fractal; the converse fails in general.
bool is_fractal(const Permutation& f, std::uint32_t p, std::uint32_t k);

struct FpgScanResult {
    std::uint64_t count = 0;
    bool group_closed = false;  ///< the scanned set is closed under compose and inverse
};

/// Exact count of fractal permutations of Z/p^k by scanning all (p^k)!
/// permutations. Requires p^k <= 8.
FpgScanResult fpg_enumerate(std::uint32_t p, std::uint32_t k);

/// Closed form prod_{l=0}^{k-1} (p!)^(p^l) for the fractal-permutation count,
/// derived from the recursion |Fpg(Z/p^k)| = |Fpg(Z/p^(k-1))| * (p!)^(p^(k-1))
/// (each fibre of p points above a fractal base is permuted freely). This
/// count is derived, not quoted; it is cross-validated against the exhaustive
/// scan wherever the scan gate allows.
BigInt fpg_order_recursion(std::uint32_t p, std::uint32_t k);

struct FractalReport {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    BigInt fpg_order;
    std::string fpg_method;  ///< "scan" (recursion cross-checked) or "recursion"
    BigInt pgr_order;
    std::string pgr_method;  ///< "formula" or "enumeration"
    bool is_proper = false;  ///< pgr_order < fpg_order
    bool index_integral = false;
    BigInt index;  ///< fpg_order / pgr_order when divisible
};

/// Compares |Pgr(Z/p^k)| with the fractal-permutation count.
FractalReport compare_pgr_fpg(std::uint32_t p, std::uint32_t k,
                              std::uint64_t jet_gate = kDefaultEnumerationGate);

}  // namespace polyperm
