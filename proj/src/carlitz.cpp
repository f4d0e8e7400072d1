#include "polyperm/carlitz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace polyperm {

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint32_t checked_prime_power(std::uint32_t p, std::uint32_t k) {
    if (!RingSpec::is_prime(p)) throw Error("p must be prime");
    if (k < 1) throw Error("k must be >= 1");
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        n *= p;
        if (n > (1ULL << 31)) throw Error("p^k exceeds the supported modulus range");
    }
    return static_cast<std::uint32_t>(n);
}

}  // namespace

// ---------------------------------------------------------------------------
// CarlitzJet

CarlitzJet::CarlitzJet(std::uint32_t p, std::uint32_t k, std::vector<std::vector<std::uint32_t>> c)
    : p_(p), k_(k), n_(checked_prime_power(p, k)), c_(std::move(c)) {
    if (c_.size() != p) throw SizeMismatch("CarlitzJet: need one row per base point");
    for (const auto& row : c_) {
        if (row.size() != k) throw SizeMismatch("CarlitzJet: need one column per level");
        for (std::uint32_t i = 0; i < k; ++i)
            if (row[i] >= level_modulus(p, k, i))
                throw Error("CarlitzJet: coefficient not reduced modulo its level modulus");
    }
}

std::uint64_t CarlitzJet::level_modulus(std::uint32_t p, std::uint32_t k, std::uint32_t i) {
    if (i >= k) throw Error("CarlitzJet: level out of range");
    return i == 0 ? pow_u64(p, k) : pow_u64(p, k - i);
}

FunctionTable jet_extend(const CarlitzJet& j) {
    const std::uint32_t p = j.prime();
    const std::uint32_t k = j.levels();
    const std::uint64_t n = j.ring_modulus();
    const std::uint64_t fibre = n / p;  // number of m-values per base point
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t x = 0; x < p; ++x) {
        const auto& row = j.coefficients()[x];
        for (std::uint64_t m = 0; m < fibre; ++m) {
            const std::uint64_t step = m * p % n;
            std::uint64_t val = row[k - 1];
            for (std::uint32_t i = k - 1; i-- > 0;) val = (val * step + row[i]) % n;
            images[x + m * p] = static_cast<std::uint32_t>(val);
        }
    }
    return FunctionTable(static_cast<std::uint32_t>(n), std::move(images));
}

bool jet_is_permutation(const CarlitzJet& j) {
    const std::uint32_t p = j.prime();
    std::vector<bool> seen(p, false);
    for (std::uint32_t x = 0; x < p; ++x) {
        const auto& row = j.coefficients()[x];
        const std::uint32_t v = row[0] % p;
        if (seen[v]) return false;
        seen[v] = true;
        if (j.levels() >= 2 && row[1] % p == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

EnumerationResult enumerate_polynomial_functions(std::uint32_t p, std::uint32_t k,
                                                 std::uint64_t jet_gate) {
    const std::uint32_t n = checked_prime_power(p, k);
    if (n > 32) throw GateExceeded("enumerate_polynomial_functions: p^k must be <= 32");

    // Radix of each jet digit, x-major then level-minor.
    std::vector<std::uint32_t> radix(static_cast<std::size_t>(p) * k);
    BigInt jet_space = 1;
    for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t i = 0; i < k; ++i) {
            radix[x * k + i] = static_cast<std::uint32_t>(CarlitzJet::level_modulus(p, k, i));
            jet_space *= radix[x * k + i];
        }
    if (jet_space > jet_gate)
        throw GateExceeded("enumerate_polynomial_functions: jet space " + jet_space.str() +
                           " exceeds gate " + std::to_string(jet_gate));

    std::vector<std::uint32_t> digits(radix.size(), 0);
    std::vector<std::uint32_t> table(n);
    std::string key(static_cast<std::size_t>(n), '\0');
    std::unordered_set<std::string> seen;
    std::vector<std::vector<std::uint32_t>> distinct;

    EnumerationResult result;
    result.p = p;
    result.k = k;
    const std::uint64_t fibre = n / p;
    while (true) {
        ++result.jet_count;
        for (std::uint32_t x = 0; x < p; ++x) {
            const std::uint32_t* row = digits.data() + static_cast<std::size_t>(x) * k;
            for (std::uint64_t m = 0; m < fibre; ++m) {
                const std::uint64_t step = m * p % n;
                std::uint64_t val = row[k - 1];
                for (std::uint32_t i = k - 1; i-- > 0;) val = (val * step + row[i]) % n;
                table[x + m * p] = static_cast<std::uint32_t>(val);
            }
        }
        for (std::uint32_t i = 0; i < n; ++i) key[i] = static_cast<char>(table[i]);
        if (seen.insert(key).second) distinct.push_back(table);

        // Odometer step.
        std::size_t d = digits.size();
        while (d > 0) {
            --d;
            if (++digits[d] < radix[d]) break;
            digits[d] = 0;
            if (d == 0) goto done;
        }
    }
done:
    result.collision_count = result.jet_count - distinct.size();
    std::sort(distinct.begin(), distinct.end());
    result.tables.reserve(distinct.size());
    for (auto& t : distinct) {
        FunctionTable ft(n, std::move(t));
        if (ft.is_bijective()) result.bijective.push_back(ft);
        result.tables.push_back(std::move(ft));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Membership

// A table t is induced by a polynomial over Z/n iff, writing t as a Newton
// series sum_j a_j*binom(x,j) with a_j the j-th forward difference of t at 0,
// every a_j is divisible by gcd(j!, n). (The falling factorials (x)_j form an
// integer basis, and e_j*(x)_j matches a_j*binom(x,j) mod n iff j!*e_j = a_j
// mod n is solvable.) For n = p^k, gcd(j!, n) = p^min(k, v_p(j!)).
bool is_polynomial_function(const FunctionTable& t, std::uint32_t p, std::uint32_t k) {
    const std::uint32_t n = checked_prime_power(p, k);
    if (t.modulus() != n) throw SizeMismatch("is_polynomial_function: table length must be p^k");

    std::vector<std::uint32_t> row(t.images());
    std::uint32_t vp_factorial = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t m = j; m % p == 0; m /= p) ++vp_factorial;
        for (std::uint32_t i = 0; i + j < n; ++i)
            row[i] = (row[i + 1] + n - row[i]) % n;
        const std::uint64_t g = pow_u64(p, std::min(vp_factorial, k));
        if (row[0] % g != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orders

BigInt pgr_order_formula(std::uint32_t p, std::uint32_t k) {
    if (!RingSpec::is_prime(p)) throw Error("pgr_order_formula: p must be prime");
    if (k < 2) throw Error("pgr_order_formula: requires k >= 2");
    const std::uint64_t e = (static_cast<std::uint64_t>(k) * k + k - 4) / 2;
    BigInt value = factorial(p) * big_pow(BigInt(p - 1) * big_pow(p, e), p);
    if (p < k)
        throw HypothesisViolated("pgr_order_formula: hypothesis p >= k violated (p=" +
                                     std::to_string(p) + ", k=" + std::to_string(k) + ")",
                                 value);
    return value;
}

PgrOrder pgr_order(const RingSpec& ring, std::uint64_t jet_gate) {
    PgrOrder result;
    result.order = 1;
    for (const auto& f : ring.factors()) {
        FactorOrder fo;
        fo.factor = f;
        if (f.k == 1) {
            fo.order = factorial(f.p);
            fo.method = OrderMethod::Formula;
        } else if (f.p >= f.k) {
            fo.order = pgr_order_formula(f.p, f.k);
            fo.method = OrderMethod::Formula;
        } else {
            auto enumeration = enumerate_polynomial_functions(f.p, f.k, jet_gate);
            fo.order = enumeration.bijective.size();
            fo.method = OrderMethod::Enumeration;
        }
        result.order *= fo.order;
        result.factors.push_back(std::move(fo));
    }
    result.proper_subgroup = result.order < factorial(ring.modulus());
    return result;
}

GeneratorSet pgr_generators(std::uint32_t p, std::uint32_t k, std::uint64_t jet_gate) {
    GeneratorSet result;
    result.p = p;
    result.k = k;
    if (k == 1) {
        checked_prime_power(p, 1);
        // Finite field: the full symmetric group, so a cycle and a
        // transposition generate.
        result.full_count = factorial(p);
        std::vector<std::uint32_t> cycle(p);
        for (std::uint32_t x = 0; x < p; ++x) cycle[x] = (x + 1) % p;
        result.generators.emplace_back(std::move(cycle));
        if (p >= 3) {
            std::vector<std::uint32_t> swap01(p);
            for (std::uint32_t x = 0; x < p; ++x) swap01[x] = x;
            std::swap(swap01[0], swap01[1]);
            result.generators.emplace_back(std::move(swap01));
        }
        return result;
    }

    const auto enumeration = enumerate_polynomial_functions(p, k, jet_gate);
    result.full_count = enumeration.bijective.size();
    const std::uint32_t n = checked_prime_power(p, k);

    // Greedy growth seeded with the translation x+1, then walking the sorted
    // element list, keeping anything not yet generated.
    std::vector<std::uint32_t> translation(n);
    for (std::uint32_t x = 0; x < n; ++x) translation[x] = (x + 1) % n;
    std::vector<Permutation> gens{Permutation(std::move(translation))};
    std::optional<PermGroup> current = PermGroup::generate(gens);
    for (const auto& t : enumeration.bijective) {
        if (current->order() == result.full_count) break;
        Permutation g = permutation_from_table(t);
        if (g.is_identity()) continue;
        if (!current->contains(g)) {
            gens.push_back(std::move(g));
            current = PermGroup::generate(gens);
        }
    }

    // Greedy elimination: drop any generator the others already produce.
    for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
        std::vector<Permutation> rest;
        rest.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (PermGroup::generate(rest).order() == result.full_count)
            gens = std::move(rest);
        else
            ++i;
    }
    result.generators = std::move(gens);
    return result;
}

// ---------------------------------------------------------------------------
// Rivest criterion

bool rivest_is_permutation(const ResiduePoly& f) {
    const std::uint32_t n = f.modulus();
    if (n < 4 || (n & (n - 1)) != 0)
        throw Error("rivest_is_permutation: modulus must be a power of two >= 4");
    const auto& a = f.coeffs();
    auto coeff = [&](std::size_t i) -> std::uint32_t { return i < a.size() ? a[i] : 0; };
    std::uint32_t even_sum = 0, odd_sum = 0;
    for (std::size_t i = 2; i < a.size(); i += 2) even_sum ^= a[i] & 1;
    for (std::size_t i = 3; i < a.size(); i += 2) odd_sum ^= a[i] & 1;
    return (coeff(1) & 1) == 1 && even_sum == 0 && odd_sum == 0;
}

// ---------------------------------------------------------------------------
// Reduction

std::optional<Permutation> try_reduce_permutation(const Permutation& f, std::uint32_t d) {
    const std::uint32_t N = f.size();
    if (d < 2 || d > N || N % d != 0) throw Error("reduce_permutation: target must divide the point count");
    std::vector<std::uint32_t> images(d);
    for (std::uint32_t y = 0; y < d; ++y) images[y] = f.apply(y) % d;
    for (std::uint32_t x = d; x < N; ++x)
        if (f.apply(x) % d != images[x % d]) return std::nullopt;
    return Permutation(std::move(images));
}

Permutation reduce_permutation(const Permutation& f, std::uint32_t d) {
    auto reduced = try_reduce_permutation(f, d);
    if (!reduced) throw NotReducible("not reducible: permutation does not respect classes mod " + std::to_string(d));
    return *std::move(reduced);
}

// ---------------------------------------------------------------------------
// Generator normalization

ResiduePoly normalize_generator(const ResiduePoly& f) {
    if (!is_permutation_polynomial(f)) throw Error("normalize_generator: not a permutation polynomial");
    const std::uint32_t n = f.modulus();
    std::uint32_t root = 0;
    while (eval_poly(f, root) != 0) ++root;
    // Taylor shift: coefficients of f(x + root) by repeated synthetic division.
    std::vector<std::uint32_t> c = f.canonical().coeffs();
    if (c.empty()) return ResiduePoly(n, {});
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = c.size() - 1; j-- > i;)
            c[j] = static_cast<std::uint32_t>((c[j] + static_cast<std::uint64_t>(root) * c[j + 1]) % n);
    if (c[0] != 0) throw Error("normalize_generator: shift did not cancel the constant term");
    return ResiduePoly(n, std::move(c));
}

// ---------------------------------------------------------------------------
// The Z/p^2 coordinates

P2Triple::P2Triple(std::uint32_t p, std::vector<std::uint32_t> a, std::vector<std::uint32_t> u,
                   Permutation sigma)
    : p_(p), a_(std::move(a)), u_(std::move(u)), sigma_(std::move(sigma)) {
    if (!RingSpec::is_prime(p)) throw Error("P2Triple: p must be prime");
    if (a_.size() != p || u_.size() != p || sigma_.size() != p)
        throw SizeMismatch("P2Triple: component sizes must equal p");
    for (std::uint32_t v : a_)
        if (v >= p) throw Error("P2Triple: offset not reduced mod p");
    for (std::uint32_t v : u_)
        if (v == 0 || v >= p) throw Error("P2Triple: slope must be a unit mod p");
}

P2Triple P2Triple::identity(std::uint32_t p) {
    return P2Triple(p, std::vector<std::uint32_t>(p, 0), std::vector<std::uint32_t>(p, 1),
                    Permutation(p));
}

P2Triple p2_triple_of(const Permutation& f) {
    const std::uint32_t N = f.size();
    const auto p = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(N))));
    if (p * p != N || !RingSpec::is_prime(p)) throw Error("p2_triple_of: point count must be p^2");
    if (!is_polynomial_function(table_from_permutation(f), p, 2))
        throw Error("p2_triple_of: not a polynomial permutation of Z/p^2");

    std::vector<std::uint32_t> sigma(p), a(p), u(p);
    for (std::uint32_t x = 0; x < p; ++x) {
        sigma[x] = f.apply(x) % p;
        a[x] = f.apply(x) / p;
        const std::uint32_t diff = (f.apply(x + p) + N - f.apply(x)) % N;
        if (diff % p != 0) throw Error("p2_triple_of: internal consistency failure");
        u[x] = (diff / p) % p;
        if (u[x] == 0) throw Error("p2_triple_of: extracted slope is not a unit");
    }
    return P2Triple(p, std::move(a), std::move(u), Permutation(std::move(sigma)));
}

Permutation p2_triple_to_perm(const P2Triple& t) {
    const std::uint32_t p = t.prime();
    const std::uint32_t N = p * p;
    std::vector<std::uint32_t> images(N);
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint64_t base =
            t.sigma().apply(x) + static_cast<std::uint64_t>(t.a()[x]) * p;
        for (std::uint32_t m = 0; m < p; ++m)
            images[x + m * p] = static_cast<std::uint32_t>(
                (base + static_cast<std::uint64_t>(m) * t.u()[x] % p * p) % N);
    }
    return Permutation(std::move(images));
}

P2Triple semidirect_multiply(const P2Triple& s, const P2Triple& t) {
    const std::uint32_t p = s.prime();
    if (t.prime() != p) throw SizeMismatch("semidirect_multiply: prime mismatch");
    std::vector<std::uint32_t> a(p), u(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        const std::uint32_t si = s.sigma().apply(i);
        a[i] = static_cast<std::uint32_t>(
            (t.a()[si] + static_cast<std::uint64_t>(t.u()[si]) * s.a()[i]) % p);
        u[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.u()[si]) * s.u()[i] % p);
    }
    return P2Triple(p, std::move(a), std::move(u), compose(s.sigma(), t.sigma()));
}

// ---------------------------------------------------------------------------
// Structure verification

namespace {

std::vector<std::uint32_t> triple_key(const P2Triple& t) {
    std::vector<std::uint32_t> key;
    key.reserve(static_cast<std::size_t>(3) * t.prime());
    key.insert(key.end(), t.a().begin(), t.a().end());
    key.insert(key.end(), t.u().begin(), t.u().end());
    key.insert(key.end(), t.sigma().images().begin(), t.sigma().images().end());
    return key;
}

P2Triple random_triple(std::uint32_t p, std::mt19937_64& rng) {
    std::vector<std::uint32_t> a(p), u(p), sigma(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        a[i] = static_cast<std::uint32_t>(rng() % p);
        u[i] = static_cast<std::uint32_t>(rng() % (p - 1)) + 1;
        sigma[i] = i;
    }
    for (std::uint32_t i = p; i-- > 1;)
        std::swap(sigma[i], sigma[static_cast<std::uint32_t>(rng() % (i + 1))]);
    return P2Triple(p, std::move(a), std::move(u), Permutation(std::move(sigma)));
}

}  // namespace

P2VerifyReport verify_p2_isomorphism(std::uint32_t p, std::uint64_t random_pairs) {
    if (!RingSpec::is_prime(p)) throw Error("verify_p2_isomorphism: p must be prime");
    if (p > 13) throw Error("verify_p2_isomorphism: p must be <= 13");

    P2VerifyReport report;
    report.p = p;
    report.triple_count = big_pow(p, p) * big_pow(p - 1, p) * factorial(p);

    if (p <= 3) {
        report.exhaustive = true;
        const auto enumeration = enumerate_polynomial_functions(p, 2);
        std::vector<Permutation> elements;
        elements.reserve(enumeration.bijective.size());
        for (const auto& t : enumeration.bijective) elements.push_back(permutation_from_table(t));
        report.group_order = elements.size();

        std::vector<P2Triple> triples;
        triples.reserve(elements.size());
        std::set<std::vector<std::uint32_t>> keys;
        for (const auto& f : elements) {
            triples.push_back(p2_triple_of(f));
            keys.insert(triple_key(triples.back()));
        }
        report.injective = keys.size() == elements.size();
        report.surjective = report.injective && BigInt(elements.size()) == report.triple_count;

        report.homomorphism = true;
        for (std::size_t i = 0; i < elements.size() && report.homomorphism; ++i) {
            for (std::size_t j = 0; j < elements.size(); ++j) {
                ++report.pairs_checked;
                if (p2_triple_of(compose(elements[i], elements[j])) !=
                    semidirect_multiply(triples[i], triples[j])) {
                    report.homomorphism = false;
                    report.counterexample = "f=" + format_cycles(elements[i]) +
                                            " g=" + format_cycles(elements[j]);
                    break;
                }
            }
        }
    } else {
        report.exhaustive = false;
        report.group_order = pgr_order_formula(p, 2);
        // The closed form p!*((p-1)p)^p must agree with the triple count.
        const bool counts_agree = report.group_order == report.triple_count;

        std::mt19937_64 rng(0xC0FFEE5EEDULL + p);
        bool round_trips = true;
        report.homomorphism = true;
        for (std::uint64_t i = 0; i < random_pairs; ++i) {
            const P2Triple s = random_triple(p, rng);
            const P2Triple t = random_triple(p, rng);
            const Permutation fs = p2_triple_to_perm(s);
            const Permutation ft = p2_triple_to_perm(t);
            if (p2_triple_of(fs) != s || p2_triple_of(ft) != t) round_trips = false;
            ++report.pairs_checked;
            if (p2_triple_of(compose(fs, ft)) != semidirect_multiply(s, t)) {
                report.homomorphism = false;
                report.counterexample = "f=" + format_cycles(fs) + " g=" + format_cycles(ft);
                break;
            }
        }
        report.injective = counts_agree && round_trips;
        report.surjective = counts_agree && round_trips;
    }

    report.pass = report.injective && report.surjective && report.homomorphism;
    return report;
}

}  // namespace polyperm
