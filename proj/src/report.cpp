#include "polyperm/report.hpp"

#include <algorithm>
#include <thread>

#include "polyperm/perm_group.hpp"

namespace polyperm {

namespace {

constexpr std::uint32_t kGeneratorDisplayCap = 128;  // emit generators only for n <= this
constexpr std::uint32_t kRecognitionCap = 512;
constexpr std::uint64_t kMultisetCap = 1'000'000;
constexpr std::uint32_t kFactorialGate = 1'000'000;  // largest k=1 prime routed to p!

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

bool enumeration_fits(std::uint32_t p, std::uint32_t k, std::uint64_t gate) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        n *= p;
        if (n > 32) return false;
    }
    BigInt jets = 1;
    for (std::uint32_t i = 0; i < k; ++i) jets *= BigInt(CarlitzJet::level_modulus(p, k, i));
    jets = big_pow(jets, p);
    return jets <= gate;
}

std::string prime_power_label(const PrimePower& f) {
    std::string s = std::to_string(f.p);
    if (f.k > 1) s += "^" + std::to_string(f.k);
    return s;
}

struct FactorAnalysis {
    BigInt order;
    std::string method;
    bool computed = false;
    std::string note;
};

FactorAnalysis symmetric_factor(std::uint32_t p, BigInt order) {
    FactorAnalysis fa;
    fa.order = std::move(order);
    fa.method = "formula";
    fa.computed = true;
    fa.note = "Z/" + std::to_string(p) + ": order " + fa.order.str() +
              " (symmetric group on " + std::to_string(p) + " points)";
    return fa;
}

FactorAnalysis analyze_factor(const PrimePower& f, std::uint64_t jet_gate, bool cross_check) {
    FactorAnalysis fa;
    const std::string label = "Z/" + prime_power_label(f);
    if (f.k == 1) {
        if (f.p > kFactorialGate) {
            fa.method = "gated";
            fa.note = label + ": not computed (prime exceeds the factorial gate " +
                      std::to_string(kFactorialGate) + ")";
            return fa;
        }
        return symmetric_factor(f.p, factorial(f.p));
    }
    if (f.p >= f.k) {
        fa.order = pgr_order_formula(f.p, f.k);
        fa.method = "formula";
        fa.computed = true;
        fa.note = label + ": order " + fa.order.str() + " (formula)";
        if (cross_check && enumeration_fits(f.p, f.k, jet_gate)) {
            const auto enumeration = enumerate_polynomial_functions(f.p, f.k, jet_gate);
            if (BigInt(enumeration.bijective.size()) != fa.order)
                throw Error(label + ": enumeration disagrees with the closed form");
            fa.method = "formula+enumeration";
            fa.note = label + ": order " + fa.order.str() + " (formula; enumeration agrees)";
        }
        return fa;
    }
    // p < k: the closed form overcounts; only exhaustive enumeration remains.
    if (enumeration_fits(f.p, f.k, jet_gate)) {
        const auto enumeration = enumerate_polynomial_functions(f.p, f.k, jet_gate);
        fa.order = enumeration.bijective.size();
        fa.method = "enumeration";
        fa.computed = true;
        fa.note = label + ": order " + fa.order.str() +
                  " (enumeration; formula inapplicable: p < k)";
    } else {
        fa.method = "gated";
        fa.note = label + ": not computed (formula inapplicable: p < k; jet space exceeds gate)";
    }
    return fa;
}

// Known inducing polynomials: translations plus the classical quartic pair
// over Z/2^w and the cubic over Z/9.
std::string source_polynomial_for(const Permutation& g, std::uint32_t q) {
    std::vector<ResiduePoly> candidates;
    for (std::uint32_t c = 1; c < q; ++c) candidates.emplace_back(q, std::vector<std::uint32_t>{c, 1});
    if (q >= 8 && (q & (q - 1)) == 0) {
        candidates.push_back(parse_poly("x^4+x^2+x", q));
        candidates.push_back(parse_poly("x^4+x^2+3x", q));
    }
    if (q == 4) candidates.push_back(parse_poly("x^4+x^2+x", q));
    if (q == 9) candidates.push_back(parse_poly("x^3+6x^2+x", q));
    for (const auto& f : candidates)
        if (poly_to_table(f).images() == g.images()) return format_poly(f);
    return "";
}

bool proper_in_symmetric(const RingSpec& ring, const BigInt& order) {
    // Exact comparison where n! is cheap. Above that: Pgr(Z/n) equals the
    // full symmetric group only for prime n (a square factor breaks mod-p
    // reduction of a transposition, and a product of >= 2 factors satisfies
    // prod q_i! < n!), and for prime n the order is n! by construction.
    if (ring.modulus() <= 100'000) return order < factorial(ring.modulus());
    return !(ring.factors().size() == 1 && ring.factors()[0].k == 1);
}

}  // namespace

std::string format_factorization(const std::vector<PrimePower>& factors) {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += prime_power_label(f);
    }
    return s;
}

GroupReport analyze_ring(std::uint32_t n, const AnalyzeOptions& opts) {
    RingSpec ring(n);
    GroupReport report;
    report.n = n;
    report.ring_label = "Z/" + std::to_string(n);
    report.factorization = ring.factors();

    std::vector<FactorAnalysis> factors;
    bool all_computed = true;
    for (const auto& f : ring.factors()) {
        factors.push_back(analyze_factor(f, opts.jet_gate, opts.cross_check));
        report.notes.push_back(factors.back().note);
        all_computed = all_computed && factors.back().computed;
    }

    if (all_computed) {
        BigInt order = 1;
        for (const auto& fa : factors) order *= fa.order;
        report.order = order;
        report.order_method = factors.size() == 1 ? factors.front().method : "product";
        report.proper_subgroup = proper_in_symmetric(ring, order);
    } else {
        report.order_method = "gated";
        report.notes.push_back("order: not computed (some factor is gated)");
    }

    // Generators mod each prime-power factor, embedded into Z/n along the
    // product decomposition.
    if (opts.want_generators && all_computed && n <= kGeneratorDisplayCap) {
        bool gens_ok = true;
        std::vector<std::vector<Permutation>> factor_gens;
        std::vector<std::vector<std::string>> factor_sources;
        for (const auto& f : ring.factors()) {
            if (f.k > 1 && !enumeration_fits(f.p, f.k, opts.jet_gate)) {
                gens_ok = false;
                break;
            }
            auto gs = pgr_generators(f.p, f.k, opts.jet_gate);
            const auto q = static_cast<std::uint32_t>(pow_u64(f.p, f.k));
            std::vector<std::string> sources;
            for (const auto& g : gs.generators) sources.push_back(source_polynomial_for(g, q));
            factor_gens.push_back(std::move(gs.generators));
            factor_sources.push_back(std::move(sources));
        }
        if (gens_ok) {
            if (ring.factors().size() == 1) {
                for (std::size_t i = 0; i < factor_gens[0].size(); ++i)
                    report.generators.push_back({format_cycles(factor_gens[0][i]), factor_sources[0][i]});
            } else {
                // Mixed-radix residue code <-> element correspondence realizing
                // Z/n = prod Z/q_i.
                std::vector<std::uint32_t> q(ring.factors().size());
                for (std::size_t i = 0; i < q.size(); ++i)
                    q[i] = static_cast<std::uint32_t>(pow_u64(ring.factors()[i].p, ring.factors()[i].k));
                std::vector<std::uint32_t> stride(q.size(), 1);
                for (std::size_t i = 1; i < q.size(); ++i) stride[i] = stride[i - 1] * q[i - 1];
                auto code_of = [&](std::uint32_t y) {
                    std::uint32_t code = 0;
                    for (std::size_t i = 0; i < q.size(); ++i) code += (y % q[i]) * stride[i];
                    return code;
                };
                std::vector<std::uint32_t> tuple_to_y(n);
                for (std::uint32_t y = 0; y < n; ++y) tuple_to_y[code_of(y)] = y;
                for (std::size_t fi = 0; fi < factor_gens.size(); ++fi) {
                    for (std::size_t gi = 0; gi < factor_gens[fi].size(); ++gi) {
                        std::vector<std::uint32_t> images(n);
                        for (std::uint32_t y = 0; y < n; ++y) {
                            const std::uint32_t r = y % q[fi];
                            std::uint32_t code = code_of(y) - r * stride[fi];
                            code += factor_gens[fi][gi].apply(r) * stride[fi];
                            images[y] = tuple_to_y[code];
                        }
                        std::string source = factor_sources[fi][gi];
                        if (!source.empty()) source += " (mod " + std::to_string(q[fi]) + " factor)";
                        report.generators.push_back({format_cycles(Permutation(std::move(images))), source});
                    }
                }
            }
        } else {
            report.notes.push_back("generators: not computed (factor exceeds enumeration gate)");
        }
    } else if (opts.want_generators && all_computed && n > kGeneratorDisplayCap) {
        report.notes.push_back("generators: omitted (n > " + std::to_string(kGeneratorDisplayCap) + ")");
    }

    if (report.order && !report.generators.empty() && *report.order <= kMultisetCap) {
        std::vector<Permutation> gens;
        gens.reserve(report.generators.size());
        for (const auto& ge : report.generators) gens.push_back(parse_cycles(ge.cycles, n));
        PermGroup G = PermGroup::generate(std::move(gens));
        if (G.order() != *report.order)
            throw Error("analyze_ring: generated order disagrees with the computed order");
        report.element_orders = element_order_multiset(G);
        if (*report.order <= kRecognitionCap)
            report.recognition = recognize_small_group(G);
        else
            report.notes.push_back("recognition: skipped (order > " + std::to_string(kRecognitionCap) + ")");
    }

    return report;
}

namespace {

GroupReport atlas_record(std::uint32_t n, const std::map<PrimePower, FactorAnalysis>& memo) {
    RingSpec ring(n);
    GroupReport report;
    report.n = n;
    report.ring_label = "Z/" + std::to_string(n);
    report.factorization = ring.factors();
    BigInt order = 1;
    bool all_computed = true;
    for (const auto& f : ring.factors()) {
        const FactorAnalysis& fa = memo.at(f);
        if (fa.computed)
            order *= fa.order;
        else
            report.notes.push_back(fa.note);
        all_computed = all_computed && fa.computed;
    }
    if (all_computed) {
        report.order = order;
        report.order_method = ring.factors().size() == 1 ? memo.at(ring.factors()[0]).method : "product";
    } else {
        report.order_method = "gated";
    }
    return report;
}

}  // namespace

std::vector<GroupReport> atlas_sweep(std::uint32_t max_n, const AtlasOptions& opts) {
    if (max_n < 2 || max_n > 10'000) throw Error("atlas: max_n must lie in [2, 10^4]");

    // Compute each needed prime-power order once, serially; per-n assembly is
    // then read-only and splits across workers without affecting the output.
    // The k=1 factors are all primes up to max_n; one running factorial pass
    // covers them instead of a from-scratch factorial per prime.
    std::map<PrimePower, FactorAnalysis> memo;
    BigInt running = 1;
    for (std::uint32_t m = 2; m <= max_n; ++m) {
        running *= m;
        if (RingSpec::is_prime(m)) memo.emplace(PrimePower{m, 1}, symmetric_factor(m, running));
    }
    for (std::uint32_t n = 2; n <= max_n; ++n) {
        const RingSpec ring(n);
        for (const auto& f : ring.factors())
            if (!memo.count(f)) memo.emplace(f, analyze_factor(f, opts.jet_gate, false));
    }

    std::vector<GroupReport> records(max_n - 1);
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        for (std::uint32_t n = 2; n <= max_n; ++n) records[n - 2] = atlas_record(n, memo);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint32_t n = 2 + t; n <= max_n; n += threads)
                    records[n - 2] = atlas_record(n, memo);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

std::string atlas_csv(const std::vector<GroupReport>& records) {
    std::string out = "n,order,method,factorization\n";
    for (const auto& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += r.order ? r.order->str() : "gated";
        out += ',';
        out += r.order_method;
        out += ',';
        out += format_factorization(r.factorization);
        out += '\n';
    }
    return out;
}

std::string group_report_text(const GroupReport& r) {
    std::string out;
    out += "ring: " + r.ring_label + "\n";
    out += "factorization: " + format_factorization(r.factorization) + "\n";
    if (r.order) {
        out += "order: " + r.order->str() + "\n";
        out += "order_method: " + r.order_method + "\n";
        if (r.proper_subgroup)
            out += std::string("proper_subgroup_of_symmetric: ") + (*r.proper_subgroup ? "yes" : "no") + "\n";
    } else {
        out += "order: not computed\n";
        out += "order_method: " + r.order_method + "\n";
    }
    if (!r.generators.empty()) {
        out += "generators:\n";
        for (const auto& g : r.generators) {
            out += "  " + g.cycles;
            if (!g.source_poly.empty()) out += "   [" + g.source_poly + "]";
            out += "\n";
        }
    }
    if (!r.recognition.empty()) out += "recognition: " + r.recognition + "\n";
    if (!r.element_orders.empty()) {
        out += "element_orders:";
        for (const auto& [ord, count] : r.element_orders)
            out += " " + std::to_string(ord) + ":" + std::to_string(count);
        out += "\n";
    }
    for (const auto& note : r.notes) out += "note: " + note + "\n";
    return out;
}

}  // namespace polyperm
