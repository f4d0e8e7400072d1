// Acceptance suite: reproduces every headline computation at desk scale,
// one pass/fail line per criterion, with a wall-clock budget each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polyperm/fractal.hpp"
#include "polyperm/perm_group.hpp"
#include "polyperm/verify.hpp"

using namespace polyperm;

namespace {

struct Criterion {
    std::string name;
    std::int64_t budget_ms;
    std::function<std::pair<bool, std::string>()> body;
};

const char* kZ27Cycles =
    "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)";

std::pair<bool, std::string> criterion_counting() {
    const auto e22 = enumerate_polynomial_functions(2, 2);
    const auto e32 = enumerate_polynomial_functions(3, 2);
    const bool ok = e22.bijective.size() == 8 && pgr_order_formula(2, 2) == 8 &&
                    e22.collision_count == 0 && e32.bijective.size() == 1296 &&
                    pgr_order_formula(3, 2) == 1296 && e32.collision_count == 0;
    return {ok, "|Pgr(Z/4)| = " + std::to_string(e22.bijective.size()) +
                    ", |Pgr(Z/9)| = " + std::to_string(e32.bijective.size()) +
                    ", collisions " + std::to_string(e22.collision_count) + "/" +
                    std::to_string(e32.collision_count)};
}

std::pair<bool, std::string> criterion_formula_failure() {
    bool flagged = false;
    BigInt value = 0;
    try {
        pgr_order_formula(2, 3);
    } catch (const HypothesisViolated& e) {
        flagged = true;
        value = e.formula_value;
    }
    const auto e23 = enumerate_polynomial_functions(2, 3);
    const bool ok = flagged && value == 512 && e23.bijective.size() == 128;
    return {ok, "formula(2,3) flagged with value " + value.str() + "; enumeration " +
                    std::to_string(e23.bijective.size())};
}

std::pair<bool, std::string> criterion_z4_structure() {
    const PermGroup G =
        PermGroup::generate({parse_cycles("(0,1,2,3)", 4), parse_cycles("(1,3)", 4)});
    const bool ok = G.order() == 8 && recognize_small_group(G) == "D4" &&
                    G.contains(parse_cycles("(0,2)", 4));
    return {ok, "order " + G.order().str() + ", " + recognize_small_group(G) +
                    ", contains (0,2)"};
}

std::pair<bool, std::string> criterion_z8_structure() {
    const Permutation g1 = permutation_from_table(poly_to_table(parse_poly("x+1", 8)));
    const Permutation g2 = permutation_from_table(poly_to_table(parse_poly("x^4+x^2+x", 8)));
    const Permutation g3 = permutation_from_table(poly_to_table(parse_poly("x^4+x^2+3x", 8)));
    if (format_cycles(g1) != "(0,1,2,3,4,5,6,7)" || format_cycles(g2) != "(1,3,5,7)(2,6)" ||
        format_cycles(g3) != "(1,5)")
        return {false, "generator cycle forms differ: " + format_cycles(g1) + " " +
                           format_cycles(g2) + " " + format_cycles(g3)};
    const PermGroup G = PermGroup::generate({g1, g2, g3});
    if (G.order() != 128) return {false, "order " + G.order().str()};
    const std::vector<Permutation> h = {parse_cycles("(3,7)", 8), parse_cycles("(2,6)", 8),
                                        parse_cycles("(1,5)", 8), parse_cycles("(0,4)", 8)};
    const auto nc = normal_closure_check(G, h);
    const PermGroup H = PermGroup::generate(h);
    const PermGroup Q = quotient_group(G, H);
    const bool ok = nc.is_normal && nc.subgroup_order == 16 && nc.quotient_order == 8 &&
                    recognize_small_group(Q) == "D4";
    return {ok, "order 128; normal subgroup order " + nc.subgroup_order.str() + ", quotient " +
                    nc.quotient_order.str() + " recognized " + recognize_small_group(Q)};
}

std::pair<bool, std::string> criterion_pfb() {
    const auto b8 = pfb_upper_bound(8), b9 = pfb_upper_bound(9), b27 = pfb_upper_bound(27);
    const bool ok = b8 == 4 && b9 == 7 && b27 == 20;
    return {ok, "pfb bounds 8 -> " + std::to_string(b8) + ", 9 -> " + std::to_string(b9) +
                    ", 27 -> " + std::to_string(b27)};
}

std::pair<bool, std::string> criterion_rivest() {
    std::uint64_t mismatches = 0;
    std::vector<std::uint32_t> coeffs(5, 0);
    while (true) {
        const ResiduePoly f(8, coeffs);
        if (is_permutation_polynomial(f) != rivest_is_permutation(f)) ++mismatches;
        std::size_t d = coeffs.size();
        bool done = true;
        while (d > 0) {
            --d;
            if (++coeffs[d] < 8) {
                done = false;
                break;
            }
            coeffs[d] = 0;
        }
        if (done) break;
    }
    std::mt19937_64 rng(0x5EED0001ULL);
    for (int i = 0; i < 100000; ++i) {
        std::vector<std::uint32_t> c(7);
        for (auto& v : c) v = static_cast<std::uint32_t>(rng() % 16);
        const ResiduePoly f(16, c);
        if (is_permutation_polynomial(f) != rivest_is_permutation(f)) ++mismatches;
    }
    return {mismatches == 0, "8^5 exhaustive over Z/8 plus 10^5 random over Z/16, " +
                                 std::to_string(mismatches) + " mismatches"};
}

std::pair<bool, std::string> criterion_reduction_surjectivity() {
    const auto e16 = enumerate_polynomial_functions(2, 4);
    const auto e8 = enumerate_polynomial_functions(2, 3);
    const auto e4 = enumerate_polynomial_functions(2, 2);
    std::set<std::vector<std::uint32_t>> pgr8, pgr4, image8;
    for (const auto& t : e8.bijective) pgr8.insert(t.images());
    for (const auto& t : e4.bijective) pgr4.insert(t.images());
    std::uint64_t failures = 0;
    for (const auto& t : e16.bijective) {
        const Permutation f = permutation_from_table(t);
        const auto r8 = try_reduce_permutation(f, 8);
        const auto r4 = try_reduce_permutation(f, 4);
        if (!r8 || !r4 || !pgr8.count(r8->images()) || !pgr4.count(r4->images()))
            ++failures;
        else
            image8.insert(r8->images());
    }
    const bool ok = failures == 0 && image8 == pgr8;
    return {ok, "|Pgr(Z/16)| = " + std::to_string(e16.bijective.size()) + ", failures " +
                    std::to_string(failures) + ", image order " + std::to_string(image8.size())};
}

std::pair<bool, std::string> criterion_p2_structure() {
    const auto v2 = verify_p2_isomorphism(2);
    const auto v3 = verify_p2_isomorphism(3);
    const auto v5 = verify_p2_isomorphism(5);
    const BigInt closed = factorial(5) * big_pow(BigInt(4) * 5, 5);
    const bool ok = v2.pass && v2.group_order == 8 && v3.pass && v3.group_order == 1296 &&
                    v3.pairs_checked == 1296ULL * 1296ULL && v5.pass &&
                    closed == 384000000 && pgr_order_formula(5, 2) == closed;
    return {ok, "p=2 pass (64 pairs), p=3 pass (" + std::to_string(v3.pairs_checked) +
                    " pairs), p=5 pass (randomized), 5!*(4*5)^5 = " + closed.str()};
}

std::pair<bool, std::string> criterion_fractal_counterexample() {
    const Permutation f = parse_cycles(kZ27Cycles, 27);
    const auto mod9 = try_reduce_permutation(f, 9);
    const auto mod3 = try_reduce_permutation(f, 3);
    const bool poly = is_polynomial_function(table_from_permutation(f), 3, 3);
    const bool ok = f.size() == 27 && mod9.has_value() && mod3.has_value() && !poly;
    return {ok, std::string("parses, bijective, reduces mod 9 and mod 3, polynomial: ") +
                    (poly ? "yes" : "no")};
}

std::pair<bool, std::string> criterion_fpg_counts() {
    const auto s22 = fpg_enumerate(2, 2);
    const auto s23 = fpg_enumerate(2, 3);
    const auto cmp = compare_pgr_fpg(3, 3);
    const bool ok = s22.count == 8 && s23.count == 128 && s22.group_closed && s23.group_closed &&
                    fpg_order_recursion(2, 2) == 8 && fpg_order_recursion(2, 3) == 128 &&
                    cmp.pgr_order == 25509168 && cmp.fpg_order == big_pow(6, 13) &&
                    cmp.is_proper;
    return {ok, "scans " + std::to_string(s22.count) + "/" + std::to_string(s23.count) +
                    "; (3,3): " + cmp.pgr_order.str() + " < " + cmp.fpg_order.str() +
                    (cmp.is_proper ? " (proper)" : "")};
}

std::pair<bool, std::string> criterion_squarefree() {
    const auto six = pgr_order(RingSpec(6));
    const auto ten = pgr_order(RingSpec(10));
    const bool ok = six.order == 12 && ten.order == 240 && ten.proper_subgroup;
    return {ok, "|Pgr(Z/6)| = " + six.order.str() + ", |Pgr(Z/10)| = " + ten.order.str() +
                    (ten.proper_subgroup ? " (proper in Sym(10))" : "")};
}

std::pair<bool, std::string> criterion_motivating_example() {
    const bool ok = is_permutation_polynomial(parse_poly("x^3+6x^2+x", 9));
    return {ok, std::string("x^3+6x^2+x mod 9 is a permutation polynomial: ") + (ok ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"counting-theorem-p-ge-k", 1000, criterion_counting},
        {"formula-failure-at-p-lt-k", 1000, criterion_formula_failure},
        {"z4-structure-d4", 1000, criterion_z4_structure},
        {"z8-structure-order-128", 1000, criterion_z8_structure},
        {"pfb-bounds", 1000, criterion_pfb},
        {"rivest-equivalence", 30000, criterion_rivest},
        {"reduction-surjectivity-z16", 60000, criterion_reduction_surjectivity},
        {"p2-structure-theorem", 120000, criterion_p2_structure},
        {"fractal-counterexample-z27", 1000, criterion_fractal_counterexample},
        {"fpg-counts-and-proper", 5000, criterion_fpg_counts},
        {"squarefree-products", 1000, criterion_squarefree},
        {"motivating-example-z9", 1000, criterion_motivating_example},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            auto [p, d] = criterion.body();
            pass = p;
            detail = d;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool in_budget = ms < criterion.budget_ms;
        pass = pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%2zu/12] %s  %-28s (%lld ms / budget %lld ms)  %s\n", i + 1,
                    pass ? "PASS" : "FAIL", criterion.name.c_str(),
                    static_cast<long long>(ms), static_cast<long long>(criterion.budget_ms),
                    detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
