#include "polyperm/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace polyperm {

namespace {
constexpr std::uint32_t kNoOrbit = std::numeric_limits<std::uint32_t>::max();

std::uint32_t min_moved_point(const Permutation& g) {
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (g.apply(x) != x) return x;
    throw Error("identity has no moved point");
}
}  // namespace

PermGroup PermGroup::generate(std::vector<Permutation> generators, GenerateOptions opts) {
    if (generators.empty()) throw Error("generate: generator list must be nonempty");
    const std::uint32_t degree = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != degree) throw SizeMismatch("generate: generators act on different point counts");

    PermGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);

    switch (opts.strategy) {
        case Strategy::ExplicitStore:
            G.build_explicit(opts.max_explicit);
            G.strategy_used_ = Strategy::ExplicitStore;
            break;
        case Strategy::StabilizerChain:
            G.build_chain();
            G.strategy_used_ = Strategy::StabilizerChain;
            break;
        case Strategy::Auto:
            try {
                G.build_explicit(opts.max_explicit);
                G.strategy_used_ = Strategy::ExplicitStore;
            } catch (const GateExceeded&) {
                G.elements_.clear();
                G.element_set_.clear();
                G.build_chain();
                G.strategy_used_ = Strategy::StabilizerChain;
            }
            break;
    }
    return G;
}

void PermGroup::build_explicit(std::uint64_t cap) {
    elements_.clear();
    element_set_.clear();
    elements_.emplace_back(degree_);
    element_set_.insert(elements_.front());
    // FIFO closure, generators in given order, so the store is reproducible.
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (const auto& g : generators_) {
            Permutation w = compose(elements_[head], g);
            if (element_set_.insert(w).second) {
                if (elements_.size() + 1 > cap)
                    throw GateExceeded("explicit element store exceeds configured cap");
                elements_.push_back(std::move(w));
            }
        }
    }
    order_ = elements_.size();
}

void PermGroup::chain_recompute_orbit(std::size_t level) {
    ChainLevel& lv = chain_[level];
    lv.orbit.clear();
    lv.orbit_pos.assign(degree_, kNoOrbit);
    lv.transversal.clear();
    lv.orbit.push_back(lv.base);
    lv.orbit_pos[lv.base] = 0;
    lv.transversal.emplace_back(degree_);
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        for (const auto& s : lv.gens) {
            const std::uint32_t y = s.apply(lv.orbit[head]);
            if (lv.orbit_pos[y] == kNoOrbit) {
                lv.orbit_pos[y] = static_cast<std::uint32_t>(lv.orbit.size());
                lv.orbit.push_back(y);
                lv.transversal.push_back(compose(lv.transversal[head], s));
            }
        }
    }
}

std::size_t PermGroup::chain_place_generator(const Permutation& g, std::size_t from) {
    std::size_t l = from;
    while (true) {
        if (l == chain_.size()) {
            ChainLevel lv;
            lv.base = min_moved_point(g);
            chain_.push_back(std::move(lv));
        }
        chain_[l].gens.push_back(g);
        if (g.apply(chain_[l].base) != chain_[l].base) return l;
        ++l;
    }
}

std::pair<Permutation, std::size_t> PermGroup::chain_strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < chain_.size(); ++l) {
        const ChainLevel& lv = chain_[l];
        const std::uint32_t x = g.apply(lv.base);
        const std::uint32_t pos = lv.orbit_pos[x];
        if (pos == kNoOrbit) return {std::move(g), l};
        g = compose(g, inverse(lv.transversal[pos]));
    }
    return {std::move(g), chain_.size()};
}

void PermGroup::chain_complete_level(std::size_t level) {
    chain_recompute_orbit(level);
    ChainLevel& lv = chain_[level];
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
        for (std::size_t si = 0; si < lv.gens.size(); ++si) {
            const Permutation& s = lv.gens[si];
            const std::uint32_t y = s.apply(lv.orbit[oi]);
            Permutation schreier =
                compose(compose(lv.transversal[oi], s), inverse(lv.transversal[lv.orbit_pos[y]]));
            if (schreier.is_identity()) continue;
            auto [residue, stop] = chain_strip(std::move(schreier), level + 1);
            (void)stop;
            if (residue.is_identity()) continue;
            const std::size_t placed = chain_place_generator(residue, level + 1);
            for (std::size_t l = placed + 1; l-- > level + 1;) chain_complete_level(l);
        }
    }
}

void PermGroup::build_chain() {
    chain_.clear();
    // At most one level per point; reserving keeps references into chain_
    // stable while chain_place_generator appends levels.
    chain_.reserve(degree_);
    for (const auto& g : generators_)
        if (!g.is_identity()) chain_place_generator(g, 0);
    for (std::size_t l = chain_.size(); l-- > 0;) chain_complete_level(l);
    order_ = 1;
    for (const auto& lv : chain_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.size() != degree_) throw SizeMismatch("contains: size mismatch");
    if (!elements_.empty()) return element_set_.count(g) != 0;
    if (chain_.empty()) return g.is_identity();
    auto [residue, stop] = chain_strip(g, 0);
    (void)stop;
    return residue.is_identity();
}

const std::vector<Permutation>& PermGroup::elements() const {
    if (elements_.empty()) throw Error("elements: group was built without an explicit store");
    return elements_;
}

namespace {

// Elements in deterministic BFS order, rebuilding an explicit store from the
// generators when the group was built chain-only.
std::vector<Permutation> elements_of(const PermGroup& G, std::uint64_t cap, const char* who) {
    if (G.order() > cap) throw Error(std::string(who) + ": group too large");
    if (G.has_element_store()) return G.elements();
    PermGroup H = PermGroup::generate(G.generators(), {Strategy::ExplicitStore, cap});
    return H.elements();
}

}  // namespace

SubgroupReport normal_closure_check(const PermGroup& G, const std::vector<Permutation>& h_gens) {
    for (const auto& h : h_gens)
        if (!G.contains(h)) throw Error("normal_closure_check: H generator not in G");

    std::vector<Permutation> gens = h_gens;
    if (gens.empty()) gens.emplace_back(G.degree());
    PermGroup H = PermGroup::generate(gens);

    SubgroupReport report;
    report.is_subgroup = true;
    report.subgroup_order = H.order();
    report.quotient_order = G.order() / H.order();
    report.is_normal = true;
    for (const auto& g : G.generators()) {
        for (const Permutation& c : {g, inverse(g)}) {
            const Permutation c_inv = inverse(c);
            for (const auto& h : H.generators()) {
                if (!H.contains(compose(compose(c, h), c_inv))) {
                    report.is_normal = false;
                    return report;
                }
            }
        }
    }
    return report;
}

std::map<std::uint64_t, std::uint64_t> element_order_multiset(const PermGroup& G) {
    const auto elements = elements_of(G, 1'000'000, "element_order_multiset");
    std::map<std::uint64_t, std::uint64_t> multiset;
    for (const auto& e : elements) ++multiset[e.order()];
    return multiset;
}

namespace {

std::map<std::uint64_t, std::uint64_t> symmetric_order_multiset(std::uint32_t m) {
    std::vector<std::uint32_t> images(m);
    for (std::uint32_t i = 0; i < m; ++i) images[i] = i;
    std::map<std::uint64_t, std::uint64_t> multiset;
    do {
        ++multiset[Permutation(images).order()];
    } while (std::next_permutation(images.begin(), images.end()));
    return multiset;
}

bool is_abelian(const PermGroup& G) {
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

}  // namespace

std::string recognize_small_group(const PermGroup& G) {
    if (G.order() > 512) throw Error("recognize_small_group: order above 512");
    const auto elements = elements_of(G, 512, "recognize_small_group");
    const std::uint64_t n = elements.size();

    if (n == 1) return "C1";

    std::map<std::uint64_t, std::uint64_t> multiset;
    for (const auto& e : elements) ++multiset[e.order()];

    if (multiset.count(n)) return "C" + std::to_string(n);

    const bool abelian = is_abelian(G);

    // Elementary abelian (Z/p)^m: abelian p-group of exponent p.
    if (abelian && multiset.size() == 2) {
        const std::uint64_t p = multiset.rbegin()->first;
        if (RingSpec::is_prime(static_cast<std::uint32_t>(p)) && multiset.at(p) == n - 1) {
            std::uint32_t m = 0;
            std::uint64_t q = n;
            while (q % p == 0) {
                q /= p;
                ++m;
            }
            if (q == 1) return "(Z/" + std::to_string(p) + ")^" + std::to_string(m);
        }
    }

    // Dihedral D_m, |G| = 2m with m >= 3: an order-m rotation r and an
    // involution s with s*r*s = r^-1 (products read left to right).
    if (n % 2 == 0 && n / 2 >= 3) {
        const std::uint64_t m = n / 2;
        if (multiset.count(m)) {
            for (const auto& r : elements) {
                if (r.order() != m) continue;
                const Permutation r_inv = inverse(r);
                for (const auto& s : elements) {
                    if (s.order() != 2) continue;
                    if (compose(compose(s, r), s) == r_inv) return "D" + std::to_string(m);
                }
            }
        }
    }

    // Symmetric group on m letters, m! <= 512 so m <= 5.
    if (!abelian) {
        std::uint64_t fact = 1;
        for (std::uint32_t m = 2; m <= 5; ++m) {
            fact *= m;
            if (fact == n && multiset == symmetric_order_multiset(m)) return "S" + std::to_string(m);
        }
    }

    return "unrecognized";
}

PermGroup quotient_group(const PermGroup& G, const PermGroup& H) {
    if (G.degree() != H.degree()) throw SizeMismatch("quotient_group: degree mismatch");
    const auto report = normal_closure_check(G, H.generators());
    if (!report.is_normal) throw Error("quotient_group: subgroup is not normal");

    const auto g_elements = elements_of(G, 1'000'000, "quotient_group");
    const auto h_elements = elements_of(H, 1'000'000, "quotient_group");

    // Coset ids assigned in BFS order of G via lexicographically least coset
    // member, so the quotient's point labels are deterministic.
    std::unordered_map<Permutation, std::uint32_t, PermHash> coset_of;
    std::map<std::vector<std::uint32_t>, std::uint32_t> coset_ids;
    std::vector<Permutation> coset_reps;
    coset_of.reserve(g_elements.size());
    for (const auto& x : g_elements) {
        std::vector<std::uint32_t> least = compose(h_elements.front(), x).images();
        for (const auto& h : h_elements) {
            auto candidate = compose(h, x).images();
            if (candidate < least) least = std::move(candidate);
        }
        auto [it, inserted] = coset_ids.emplace(std::move(least), static_cast<std::uint32_t>(coset_reps.size()));
        if (inserted) coset_reps.push_back(x);
        coset_of.emplace(x, it->second);
    }

    const auto q = static_cast<std::uint32_t>(coset_reps.size());
    std::vector<Permutation> action_gens;
    action_gens.reserve(G.generators().size());
    for (const auto& g : G.generators()) {
        std::vector<std::uint32_t> images(q);
        for (std::uint32_t c = 0; c < q; ++c) images[c] = coset_of.at(compose(coset_reps[c], g));
        action_gens.emplace_back(std::move(images));
    }
    PermGroup Q = PermGroup::generate(action_gens);
    if (Q.order() != report.quotient_order) throw Error("quotient_group: coset action order mismatch");
    return Q;
}

}  // namespace polyperm
