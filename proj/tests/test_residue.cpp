#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "polyperm/residue.hpp"

using namespace polyperm;

namespace {

ResiduePoly random_poly(std::uint32_t n, std::uint32_t max_degree, std::mt19937_64& rng) {
    std::vector<std::uint32_t> coeffs(rng() % (max_degree + 1) + 1);
    for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % n);
    return ResiduePoly(n, std::move(coeffs));
}

}  // namespace

TEST_CASE("modulus factorization") {
    RingSpec r36(36);
    REQUIRE(r36.factors() == std::vector<PrimePower>{{2, 2}, {3, 2}});
    CHECK(!r36.squarefree());
    CHECK(RingSpec(30).squarefree());
    CHECK(RingSpec(7).is_prime_power());
    CHECK_THROWS_AS(RingSpec(1), Error);
    CHECK_THROWS_AS(RingSpec(12, {{3, 1}, {2, 2}}), Error);   // primes out of order
    CHECK_THROWS_AS(RingSpec(12, {{2, 2}, {5, 1}}), Error);   // wrong product
    CHECK_NOTHROW(RingSpec(12, {{2, 2}, {3, 1}}));
}

TEST_CASE("polynomial evaluation") {
    CHECK(eval_poly(parse_poly("x", 9), 5) == 5);
    CHECK(eval_poly(parse_poly("x+1", 9), 8) == 0);
    CHECK(eval_poly(parse_poly("x^3+6x^2+x", 9), 1) == 8);
}

TEST_CASE("polynomial to table") {
    CHECK(poly_to_table(parse_poly("x+1", 4)).images() == std::vector<std::uint32_t>{1, 2, 3, 0});
    CHECK(poly_to_table(parse_poly("x^2", 4)).images() == std::vector<std::uint32_t>{0, 1, 0, 1});
    CHECK(poly_to_table(parse_poly("x^3+6x^2+x", 9)).is_bijective());
}

TEST_CASE("permutation polynomial test") {
    for (std::uint32_t n : {4u, 8u, 9u, 27u}) CHECK(is_permutation_polynomial(parse_poly("x+1", n)));
    CHECK(is_permutation_polynomial(parse_poly("x^3+6x^2+x", 9)));
    CHECK(!is_permutation_polynomial(parse_poly("x^2", 4)));
}

TEST_CASE("formal derivative") {
    CHECK(formal_derivative(parse_poly("x^3+6x^2+x", 9)) == parse_poly("3x^2+3x+1", 9));
    CHECK(formal_derivative(ResiduePoly(9, {7})).degree() == -1);
    CHECK(formal_derivative(parse_poly("x^4+x^2+x", 8)) == parse_poly("4x^3+2x+1", 8));
}

TEST_CASE("derivative is linear") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const std::uint32_t n = 9;
        const ResiduePoly f = random_poly(n, 6, rng);
        const ResiduePoly g = random_poly(n, 6, rng);
        CHECK(formal_derivative(f + g).canonical() ==
              (formal_derivative(f) + formal_derivative(g)).canonical());
    }
}

TEST_CASE("product of polynomials evaluates pointwise") {
    std::mt19937_64 rng(42);
    for (std::uint32_t n : {4u, 8u, 9u, 16u, 27u}) {
        for (int i = 0; i < 200; ++i) {
            const ResiduePoly f = random_poly(n, 5, rng);
            const ResiduePoly g = random_poly(n, 5, rng);
            const auto x = static_cast<std::uint32_t>(rng() % n);
            const std::uint64_t expected =
                static_cast<std::uint64_t>(eval_poly(f, x)) * eval_poly(g, x) % n;
            CHECK(eval_poly(f * g, x) == expected);
        }
    }
}

TEST_CASE("tables ignore trailing zero coefficients") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t n = 8;
        ResiduePoly f = random_poly(n, 5, rng);
        std::vector<std::uint32_t> padded = f.coeffs();
        padded.resize(padded.size() + 3, 0);
        const ResiduePoly g(n, padded);
        CHECK(poly_to_table(f) == poly_to_table(g));
        CHECK(f.canonical() == g.canonical());
        CHECK_FALSE(f == g);  // syntactic equality keeps trailing zeros apart
    }
}

TEST_CASE("prime moduli realize every permutation by low-degree polynomials") {
    for (std::uint32_t n : {2u, 3u}) {
        std::set<std::vector<std::uint32_t>> bijective;
        std::vector<std::uint32_t> coeffs(n, 0);  // degree < n
        while (true) {
            const FunctionTable t = poly_to_table(ResiduePoly(n, coeffs));
            if (t.is_bijective()) bijective.insert(t.images());
            std::size_t d = coeffs.size();
            bool done = true;
            while (d > 0) {
                --d;
                if (++coeffs[d] < n) {
                    done = false;
                    break;
                }
                coeffs[d] = 0;
            }
            if (done) break;
        }
        std::uint64_t fact = 1;
        for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
        CHECK(bijective.size() == fact);
    }
}

TEST_CASE("power-distinctness degree bound") {
    CHECK(pfb_upper_bound(8) == 4);
    CHECK(pfb_upper_bound(9) == 7);
    CHECK(pfb_upper_bound(27) == 20);
}

TEST_CASE("polynomial text round trips") {
    const ResiduePoly f = parse_poly("x^3+6x^2+x", 9);
    CHECK(f.coeffs() == std::vector<std::uint32_t>{0, 1, 6, 1});
    CHECK(format_poly(f) == "x^3+6x^2+x");
    CHECK(format_coeff_list(f) == "[0,1,6,1]");
    CHECK(parse_poly("[0,1,6,1]", 9) == f);
    CHECK(parse_poly(" x^3 + 6x^2 + x ", 9) == f);
    CHECK(format_poly(ResiduePoly(9, {})) == "0");
    CHECK(format_poly(parse_poly("[5]", 9)) == "5");
    CHECK(parse_poly("2x+2x", 4) == parse_poly("[0,0]", 4));  // repeated powers fold mod n

    CHECK_THROWS_AS(parse_poly("x^3-6x^2", 9), ParseError);  // negative rejected
    CHECK_THROWS_AS(parse_poly("9x", 9), ParseError);        // not reduced
    CHECK_THROWS_AS(parse_poly("[1,10]", 9), ParseError);
    CHECK_THROWS_AS(parse_poly("", 9), ParseError);
    CHECK_THROWS_AS(parse_poly("x^", 9), ParseError);
    CHECK_THROWS_AS(parse_poly("x+", 9), ParseError);
    CHECK(ResiduePoly::from_integers(9, {-1, 10}) == parse_poly("x+8", 9));
}

TEST_CASE("polynomial parser never crashes on garbage") {
    std::mt19937_64 rng(4321);
    const std::string alphabet = "0123456789x^+[], ()-";
    for (int i = 0; i < 3000; ++i) {
        std::string text;
        const std::size_t len = rng() % 24;
        for (std::size_t j = 0; j < len; ++j) text += alphabet[rng() % alphabet.size()];
        try {
            const ResiduePoly f = parse_poly(text, 9);
            for (std::uint32_t c : f.coeffs()) CHECK(c < 9);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FunctionTable(4, {0, 1, 2}), SizeMismatch);
    CHECK_THROWS_AS(FunctionTable(4, {0, 1, 2, 4}), Error);
    CHECK_THROWS_AS(ResiduePoly(4, {4}), Error);
    CHECK_THROWS_AS(eval_poly(parse_poly("x", 4), 4), Error);
}
