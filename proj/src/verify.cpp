#include "polyperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "polyperm/fractal.hpp"
#include "polyperm/perm_group.hpp"

namespace polyperm {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

CheckResult run_check(const std::string& name, const Check& body) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        result.pass = pass;
        result.detail = detail;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return result;
}

std::pair<bool, std::string> check_counting_small(std::uint32_t p, std::uint32_t k,
                                                  std::uint64_t jet_gate) {
    const auto enumeration = enumerate_polynomial_functions(p, k, jet_gate);
    const BigInt formula = pgr_order_formula(p, k);
    const bool ok =
        BigInt(enumeration.bijective.size()) == formula && enumeration.collision_count == 0;
    return {ok, "enumeration " + std::to_string(enumeration.bijective.size()) + ", formula " +
                    formula.str() + ", collisions " +
                    std::to_string(enumeration.collision_count)};
}

std::pair<bool, std::string> check_formula_gate(std::uint64_t jet_gate) {
    bool flagged = false;
    BigInt formula_value = 0;
    try {
        pgr_order_formula(2, 3);
    } catch (const HypothesisViolated& e) {
        flagged = true;
        formula_value = e.formula_value;
    }
    const auto enumeration = enumerate_polynomial_functions(2, 3, jet_gate);
    const bool ok = flagged && formula_value == 512 && enumeration.bijective.size() == 128;
    return {ok, "formula flagged inapplicable with value " + formula_value.str() +
                    "; enumeration " + std::to_string(enumeration.bijective.size())};
}

std::pair<bool, std::string> check_squarefree(std::uint64_t jet_gate) {
    const auto six = pgr_order(RingSpec(6), jet_gate);
    const auto ten = pgr_order(RingSpec(10), jet_gate);
    const auto thirty_six = pgr_order(RingSpec(36), jet_gate);
    const bool ok = six.order == 12 && ten.order == 240 && ten.proper_subgroup &&
                    thirty_six.order == 10368;
    return {ok, "|Pgr(Z/6)|=" + six.order.str() + " |Pgr(Z/10)|=" + ten.order.str() +
                    (ten.proper_subgroup ? " (proper)" : " (not proper)") +
                    " |Pgr(Z/36)|=" + thirty_six.order.str()};
}

std::pair<bool, std::string> check_rivest_exhaustive_z8() {
    std::uint64_t mismatches = 0, permutations = 0;
    std::vector<std::uint32_t> coeffs(5, 0);
    while (true) {
        const ResiduePoly f(8, coeffs);
        const bool brute = is_permutation_polynomial(f);
        if (brute != rivest_is_permutation(f)) ++mismatches;
        if (brute) ++permutations;
        std::size_t d = coeffs.size();
        while (d > 0) {
            --d;
            if (++coeffs[d] < 8) break;
            coeffs[d] = 0;
            if (d == 0) goto done;
        }
    }
done:
    return {mismatches == 0, "32768 polynomials of degree <= 4 over Z/8, " +
                                 std::to_string(permutations) + " permutations, " +
                                 std::to_string(mismatches) + " mismatches"};
}

std::pair<bool, std::string> check_rivest_random_z16() {
    std::mt19937_64 rng(0x5EED0001ULL);
    std::uint64_t mismatches = 0;
    for (int i = 0; i < 100000; ++i) {
        std::vector<std::uint32_t> coeffs(7);
        for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % 16);
        const ResiduePoly f(16, coeffs);
        if (is_permutation_polynomial(f) != rivest_is_permutation(f)) ++mismatches;
    }
    return {mismatches == 0, "100000 random polynomials of degree <= 6 over Z/16, " +
                                 std::to_string(mismatches) + " mismatches"};
}

std::pair<bool, std::string> check_p2(std::uint32_t p) {
    const auto report = verify_p2_isomorphism(p);
    std::string detail = "order " + report.group_order.str() + ", triples " +
                         report.triple_count.str() + ", pairs " +
                         std::to_string(report.pairs_checked) +
                         (report.exhaustive ? " (exhaustive)" : " (randomized)");
    if (!report.counterexample.empty()) detail += "; counterexample " + report.counterexample;
    return {report.pass, detail};
}

std::pair<bool, std::string> check_p5_formula() {
    const BigInt expected("384000000");
    const BigInt formula = pgr_order_formula(5, 2);
    const BigInt closed = factorial(5) * big_pow(BigInt(4) * 5, 5);
    const bool ok = formula == expected && closed == expected;
    return {ok, "pgr_order_formula(5,2) = " + formula.str() + ", 5!*(4*5)^5 = " + closed.str()};
}

const char* kZ27Cycles =
    "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)";

std::pair<bool, std::string> check_z27_counterexample() {
    const Permutation f = parse_cycles(kZ27Cycles, 27);
    const auto mod9 = try_reduce_permutation(f, 9);
    const auto mod3 = try_reduce_permutation(f, 3);
    const bool fractal = is_fractal(f, 3, 3);
    const bool poly = is_polynomial_function(table_from_permutation(f), 3, 3);
    const bool ok = mod9.has_value() && mod3.has_value() && fractal && !poly;
    std::string detail = "reduces mod 9: " + std::string(mod9 ? "yes" : "no") +
                         ", mod 3: " + std::string(mod3 ? "yes" : "no") +
                         ", fractal: " + (fractal ? "yes" : "no") +
                         ", polynomial: " + (poly ? "yes" : "no");
    if (mod9) detail += "; image mod 9 = " + format_cycles(*mod9);
    if (mod3) detail += "; image mod 3 = " + format_cycles(*mod3);
    return {ok, detail};
}

std::pair<bool, std::string> check_fpg_scans() {
    const auto s21 = fpg_enumerate(2, 1);
    const auto s22 = fpg_enumerate(2, 2);
    const auto s23 = fpg_enumerate(2, 3);
    const bool ok = s21.count == 2 && s22.count == 8 && s23.count == 128 && s21.group_closed &&
                    s22.group_closed && s23.group_closed &&
                    fpg_order_recursion(2, 1) == 2 && fpg_order_recursion(2, 2) == 8 &&
                    fpg_order_recursion(2, 3) == 128;
    return {ok, "scans (2,1)=" + std::to_string(s21.count) + " (2,2)=" + std::to_string(s22.count) +
                    " (2,3)=" + std::to_string(s23.count) + ", all closed, recursion agrees"};
}

std::pair<bool, std::string> check_fpg_proper_3_3(std::uint64_t jet_gate) {
    const auto report = compare_pgr_fpg(3, 3, jet_gate);
    const BigInt six_13 = big_pow(6, 13);
    const bool ok = report.pgr_order == 25509168 && report.fpg_order == six_13 &&
                    report.is_proper && report.index_integral && report.index == 512;
    return {ok, "pgr " + report.pgr_order.str() + " vs fpg " + report.fpg_order.str() +
                    (report.is_proper ? " (proper, index " + report.index.str() + ")"
                                      : " (not proper)")};
}

std::pair<bool, std::string> check_reduction_surjectivity(std::uint64_t jet_gate) {
    const auto e16 = enumerate_polynomial_functions(2, 4, jet_gate);
    const auto e8 = enumerate_polynomial_functions(2, 3, jet_gate);
    const auto e4 = enumerate_polynomial_functions(2, 2, jet_gate);

    std::set<std::vector<std::uint32_t>> pgr8, pgr4;
    for (const auto& t : e8.bijective) pgr8.insert(t.images());
    for (const auto& t : e4.bijective) pgr4.insert(t.images());

    std::set<std::vector<std::uint32_t>> image8;
    std::uint64_t failures = 0;
    for (const auto& t : e16.bijective) {
        const Permutation f = permutation_from_table(t);
        const auto r8 = try_reduce_permutation(f, 8);
        const auto r4 = try_reduce_permutation(f, 4);
        if (!r8 || !r4 || !pgr8.count(r8->images()) || !pgr4.count(r4->images())) {
            ++failures;
            continue;
        }
        image8.insert(r8->images());
    }
    const bool ok = failures == 0 && image8.size() == 128 && image8 == pgr8;
    return {ok, "|Pgr(Z/16)| = " + std::to_string(e16.bijective.size()) + ", " +
                    std::to_string(failures) + " reduction failures, image in Sym(8) has order " +
                    std::to_string(image8.size())};
}

SuiteResult make_suite(const std::string& name,
                       const std::vector<std::pair<std::string, Check>>& checks) {
    SuiteResult suite;
    suite.suite = name;
    suite.pass = true;
    for (const auto& [check_name, body] : checks) {
        suite.checks.push_back(run_check(check_name, body));
        suite.pass = suite.pass && suite.checks.back().pass;
    }
    return suite;
}

std::vector<std::pair<std::string, Check>> suite_checks(const std::string& name,
                                                        std::uint64_t jet_gate) {
    if (name == "counting")
        return {
            {"z4-enumeration-matches-formula", [=] { return check_counting_small(2, 2, jet_gate); }},
            {"z9-enumeration-matches-formula", [=] { return check_counting_small(3, 2, jet_gate); }},
            {"z8-formula-inapplicable", [=] { return check_formula_gate(jet_gate); }},
            {"squarefree-products", [=] { return check_squarefree(jet_gate); }},
        };
    if (name == "rivest")
        return {
            {"z8-exhaustive-degree-4", [] { return check_rivest_exhaustive_z8(); }},
            {"z16-random-degree-6", [] { return check_rivest_random_z16(); }},
        };
    if (name == "p2-structure")
        return {
            {"p2-exhaustive", [] { return check_p2(2); }},
            {"p3-exhaustive", [] { return check_p2(3); }},
            {"p5-randomized", [] { return check_p2(5); }},
            {"p5-formula-cross-check", [] { return check_p5_formula(); }},
        };
    if (name == "fractal")
        return {
            {"z27-counterexample", [] { return check_z27_counterexample(); }},
            {"fpg-scan-matches-recursion", [] { return check_fpg_scans(); }},
            {"pgr-proper-in-fpg-3-3", [=] { return check_fpg_proper_3_3(jet_gate); }},
        };
    if (name == "reductions")
        return {
            {"z16-reduces-onto-z8-and-z4", [=] { return check_reduction_surjectivity(jet_gate); }},
        };
    throw Error("unknown verification suite: " + name);
}

}  // namespace

bool is_known_suite(const std::string& name) {
    static const std::vector<std::string> known = {"counting", "rivest", "p2-structure",
                                                   "fractal", "reductions", "all"};
    return std::find(known.begin(), known.end(), name) != known.end();
}

SuiteResult run_suite(const std::string& name, std::uint64_t jet_gate) {
    if (name == "all") {
        SuiteResult all;
        all.suite = "all";
        all.pass = true;
        for (const char* sub : {"counting", "rivest", "p2-structure", "fractal", "reductions"}) {
            SuiteResult part = run_suite(sub, jet_gate);
            all.pass = all.pass && part.pass;
            for (auto& check : part.checks) {
                check.name = part.suite + "/" + check.name;
                all.checks.push_back(std::move(check));
            }
        }
        return all;
    }
    return make_suite(name, suite_checks(name, jet_gate));
}

}  // namespace polyperm
