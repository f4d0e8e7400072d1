#include <doctest.h>

#include "polyperm/fractal.hpp"
#include "polyperm/residue.hpp"

using namespace polyperm;

namespace {
const char* kZ27Cycles =
    "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)";
}

TEST_CASE("fractal membership") {
    CHECK(is_fractal(parse_cycles(kZ27Cycles, 27), 3, 3));
    CHECK(!is_fractal(parse_cycles("(0,1)", 4), 2, 2));
    for (const auto& t : enumerate_polynomial_functions(2, 3).bijective)
        CHECK(is_fractal(permutation_from_table(t), 2, 3));
    CHECK_THROWS_AS(is_fractal(parse_cycles("(0,1)", 4), 2, 3), SizeMismatch);
}

TEST_CASE("every bijective polynomial table is fractal") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {2, 3}, {3, 2}})
        for (const auto& t : enumerate_polynomial_functions(p, k).bijective)
            REQUIRE(is_fractal(permutation_from_table(t), p, k));
}

TEST_CASE("exhaustive scans") {
    const auto s21 = fpg_enumerate(2, 1);
    CHECK(s21.count == 2);
    CHECK(s21.group_closed);

    const auto s22 = fpg_enumerate(2, 2);
    CHECK(s22.count == 8);
    CHECK(s22.group_closed);

    const auto s23 = fpg_enumerate(2, 3);
    CHECK(s23.count == 128);
    CHECK(s23.group_closed);

    CHECK_THROWS_AS(fpg_enumerate(3, 2), GateExceeded);
}

TEST_CASE("closed-form count matches the scans") {
    CHECK(fpg_order_recursion(2, 1) == 2);
    CHECK(fpg_order_recursion(2, 2) == 8);
    CHECK(fpg_order_recursion(2, 3) == 128);
    CHECK(fpg_order_recursion(3, 3) == big_pow(6, 13));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) CHECK(fpg_order_recursion(p, 1) == factorial(p));
}

TEST_CASE("polynomial group inside the fractal group") {
    const auto r33 = compare_pgr_fpg(3, 3);
    CHECK(r33.pgr_order == 25509168);
    CHECK(r33.fpg_order == big_pow(6, 13));
    CHECK(r33.is_proper);
    CHECK(r33.index_integral);
    CHECK(r33.index == 512);
    CHECK(r33.fpg_method == "recursion");
    CHECK(r33.pgr_method == "formula");

    const auto r23 = compare_pgr_fpg(2, 3);
    CHECK(r23.pgr_order == 128);
    CHECK(r23.fpg_order == 128);
    CHECK(!r23.is_proper);
    CHECK(r23.fpg_method == "scan");
    CHECK(r23.pgr_method == "enumeration");

    const auto r21 = compare_pgr_fpg(2, 1);
    CHECK(r21.pgr_order == 2);
    CHECK(r21.fpg_order == 2);
    CHECK(!r21.is_proper);
}
