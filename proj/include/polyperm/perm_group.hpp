#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyperm/bigint.hpp"
#include "polyperm/perm.hpp"

namespace polyperm {

enum class Strategy {
    Auto,            ///< explicit store while the running count stays within the cap, else chain
    ExplicitStore,   ///< breadth-first closure; throws GateExceeded past the cap
    StabilizerChain  ///< deterministic Schreier-Sims with base 0,1,2,...
};

struct GenerateOptions {
    Strategy strategy = Strategy::Auto;
    std::uint64_t max_explicit = 10'000'000;
};

/// A permutation group given by generators, with a cached order and exact
/// membership queries. Construction is single-threaded; a completed group is
/// immutable and safe to share across threads.
class PermGroup {
public:
    static PermGroup generate(std::vector<Permutation> generators, GenerateOptions opts = {});

    std::uint32_t degree() const { return degree_; }
    const BigInt& order() const { return order_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    Strategy strategy_used() const { return strategy_used_; }

    bool contains(const Permutation& g) const;

    bool has_element_store() const { return !elements_.empty(); }

    /// All elements in deterministic breadth-first order (generators in given
    /// order, FIFO queue). Throws unless the explicit store was built.
    const std::vector<Permutation>& elements() const;

private:
    PermGroup() = default;

    struct ChainLevel {
        std::uint32_t base = 0;
        std::vector<Permutation> gens;          // strong generators fixing all earlier bases
        std::vector<std::uint32_t> orbit;       // BFS discovery order, orbit[0] == base
        std::vector<std::uint32_t> orbit_pos;   // point -> index into orbit, or npos
        std::vector<Permutation> transversal;   // transversal[i] maps base -> orbit[i]
    };

    void build_explicit(std::uint64_t cap);
    void build_chain();
    void chain_recompute_orbit(std::size_t level);
    void chain_complete_level(std::size_t level);
    std::size_t chain_place_generator(const Permutation& g, std::size_t from);
    std::pair<Permutation, std::size_t> chain_strip(Permutation g, std::size_t from) const;

    std::uint32_t degree_ = 0;
    std::vector<Permutation> generators_;
    BigInt order_ = 1;
    Strategy strategy_used_ = Strategy::Auto;

    std::vector<Permutation> elements_;                        // BFS order; empty if chain-only
    std::unordered_set<Permutation, PermHash> element_set_;
    std::vector<ChainLevel> chain_;
};

struct SubgroupReport {
    bool is_subgroup = false;
    bool is_normal = false;
    BigInt subgroup_order;
    BigInt quotient_order;
};

/// Reports whether the subgroup generated by h_gens is normal in G, with its
/// order and index. Throws if some h generator is not an element of G.
SubgroupReport normal_closure_check(const PermGroup& G, const std::vector<Permutation>& h_gens);

/// Multiset of element orders, as order -> multiplicity. Requires |G| <= 1e6.
std::map<std::uint64_t, std::uint64_t> element_order_multiset(const PermGroup& G);

/// Names the group when it belongs to one of the recognized families:
/// "C<m>" (cyclic), "(Z/<p>)^<m>" (elementary abelian), "D<m>" (dihedral,
/// |G| = 2m, m >= 3), "S<m>" (symmetric); otherwise "unrecognized".
/// Requires |G| <= 512.
std::string recognize_small_group(const PermGroup& G);

/// The quotient G/H realized as the permutation group induced on the right
/// cosets of H. H must be normal in G; both groups need explicit stores.
PermGroup quotient_group(const PermGroup& G, const PermGroup& H);

}  // namespace polyperm
