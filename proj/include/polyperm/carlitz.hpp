#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyperm/bigint.hpp"
#include "polyperm/perm.hpp"
#include "polyperm/perm_group.hpp"
#include "polyperm/residue.hpp"

namespace polyperm {

/// The jet data that determines a polynomial function on Z/p^k: for each base
/// point x in [0, p), the value c[x][0] in Z/p^k and, for i >= 1, the level-i
/// coefficient c[x][i], stored reduced modulo p^(k-i). Higher residues of
/// level-i coefficients never affect the induced function, which is why they
/// are stored reduced: the jet space then parametrizes the choice space
/// exactly.
class CarlitzJet {
public:
    /// c must be a p-row table with k entries per row, each entry reduced
    /// modulo level_modulus(p, k, i); p must be prime.
    CarlitzJet(std::uint32_t p, std::uint32_t k, std::vector<std::vector<std::uint32_t>> c);

    std::uint32_t prime() const { return p_; }
    std::uint32_t levels() const { return k_; }
    std::uint32_t ring_modulus() const { return n_; }
    const std::vector<std::vector<std::uint32_t>>& coefficients() const { return c_; }

    /// p^k for level 0, p^(k-i) for levels i >= 1.
    static std::uint64_t level_modulus(std::uint32_t p, std::uint32_t k, std::uint32_t i);

    bool operator==(const CarlitzJet&) const = default;

private:
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t n_ = 0;  // p^k
    std::vector<std::vector<std::uint32_t>> c_;
};

/// Extends the jet to the full evaluation table on Z/p^k:
/// entry (x + m*p) = sum_i (m*p)^i * c[x][i] mod p^k.
FunctionTable jet_extend(const CarlitzJet& j);

/// True iff the jet extends to a permutation: values pairwise distinct mod p
/// and, for k >= 2, every level-1 coefficient a unit. Agrees with bijectivity
/// of jet_extend for every jet.
bool jet_is_permutation(const CarlitzJet& j);

constexpr std::uint64_t kDefaultEnumerationGate = 1ULL << 26;

struct EnumerationResult {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t jet_count = 0;
    std::uint64_t collision_count = 0;     ///< jets minus distinct tables
    std::vector<FunctionTable> tables;     ///< distinct tables, sorted
    std::vector<FunctionTable> bijective;  ///< distinct bijective tables, sorted
};

/// The exact set of polynomial functions on Z/p^k, by enumerating all jets,
/// extending each, and deduplicating tables. Requires p^k <= 32 and a jet
/// space of at most jet_gate.
EnumerationResult enumerate_polynomial_functions(std::uint32_t p, std::uint32_t k,
                                                 std::uint64_t jet_gate = kDefaultEnumerationGate);

/// Membership test: is the table induced by some polynomial over Z/p^k?
/// Decided by a finite-difference divisibility criterion (see the
/// implementation); valid for all p, k including p < k.
bool is_polynomial_function(const FunctionTable& t, std::uint32_t p, std::uint32_t k);

/// |Pgr(Z/p^k)| = p! * [(p-1) * p^((k^2+k-4)/2)]^p, exact. Requires k >= 2.
/// Throws HypothesisViolated (carrying the formula value) when p < k, where
/// the closed form overcounts.
BigInt pgr_order_formula(std::uint32_t p, std::uint32_t k);

enum class OrderMethod { Formula, Enumeration };

struct FactorOrder {
    PrimePower factor;
    BigInt order;
    OrderMethod method = OrderMethod::Formula;
};

struct PgrOrder {
    BigInt order;
    bool proper_subgroup = false;  ///< order < n!
    std::vector<FactorOrder> factors;
};

/// |Pgr(Z/n)| as the product over the prime-power factors of n: p! for k = 1,
/// the closed form for p >= k, exhaustive jet enumeration otherwise. Throws
/// GateExceeded when some factor fits neither path.
PgrOrder pgr_order(const RingSpec& ring, std::uint64_t jet_gate = kDefaultEnumerationGate);

struct GeneratorSet {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    /// Size of the full jet-derived generating set (all distinct bijective
    /// jet extensions); equals the group order.
    BigInt full_count;
    /// Reduced generating set; generates the same group.
    std::vector<Permutation> generators;
};

/// A generating set for Pgr(Z/p^k) as a subgroup of the symmetric group on
/// p^k points, reduced greedily from the full jet-derived set.
GeneratorSet pgr_generators(std::uint32_t p, std::uint32_t k,
                            std::uint64_t jet_gate = kDefaultEnumerationGate);

/// Rivest's parity criterion over Z/2^w (w >= 2): a_1 odd, a_2+a_4+... even,
/// a_3+a_5+... even. Equivalent to bijectivity of the induced map.
bool rivest_is_permutation(const ResiduePoly& f);

/// The permutation induced on Z/d (d dividing the point count), when f
/// respects congruence classes mod d; nullopt otherwise.
std::optional<Permutation> try_reduce_permutation(const Permutation& f, std::uint32_t d);

/// Like try_reduce_permutation but throws NotReducible on failure.
Permutation reduce_permutation(const Permutation& f, std::uint32_t d);

/// Replaces a permutation polynomial f by the expansion of f(x + r), where
/// f(r) = 0, which has no constant term and induces the same group element up
/// to a translation.
ResiduePoly normalize_generator(const ResiduePoly& f);

/// Coordinates of a polynomial permutation of Z/p^2: the induced permutation
/// sigma mod p, the value offsets a_x = (f(x) - sigma(x))/p, and the unit
/// slopes u_x = (f(x+p) - f(x))/p mod p.
class P2Triple {
public:
    P2Triple(std::uint32_t p, std::vector<std::uint32_t> a, std::vector<std::uint32_t> u,
             Permutation sigma);

    static P2Triple identity(std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    const std::vector<std::uint32_t>& a() const { return a_; }
    const std::vector<std::uint32_t>& u() const { return u_; }
    const Permutation& sigma() const { return sigma_; }

    bool operator==(const P2Triple&) const = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
    std::vector<std::uint32_t> u_;
    Permutation sigma_;
};

/// Extracts the triple of a polynomial permutation of Z/p^2 (p inferred from
/// the point count). Throws when f is not a polynomial function or an
/// extracted slope is not a unit.
P2Triple p2_triple_of(const Permutation& f);

/// Inverse of p2_triple_of: the permutation with f(x + mp) = sigma(x) + a_x*p
/// + m*p*u_x.
Permutation p2_triple_to_perm(const P2Triple& t);

/// Product in the iterated semidirect product, matching left-to-right
/// composition of the underlying permutations:
/// ((a),(u),sigma) * ((b),(v),tau) =
/// ((b_{sigma(i)} + v_{sigma(i)} a_i), (v_{sigma(i)} u_i), sigma*tau).
P2Triple semidirect_multiply(const P2Triple& s, const P2Triple& t);

struct P2VerifyReport {
    std::uint32_t p = 0;
    bool exhaustive = false;
    BigInt group_order;
    BigInt triple_count;
    bool injective = false;
    bool surjective = false;
    bool homomorphism = false;
    std::uint64_t pairs_checked = 0;
    std::string counterexample;  ///< empty when everything passed
    bool pass = false;
};

/// Checks that f -> triple is a group isomorphism onto the triple space:
/// exhaustively over all pairs for p <= 3, by deterministic random sampling
/// for 3 < p <= 13.
P2VerifyReport verify_p2_isomorphism(std::uint32_t p, std::uint64_t random_pairs = 10000);

}  // namespace polyperm
