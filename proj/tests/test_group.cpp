#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qext/fixtures.hpp"
#include "qext/group.hpp"

using namespace qext;

TEST_CASE("explicit table: Z2") {
    FiniteGroup g("Z2", {{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.mul(1, 1) == 0);
    CHECK(g.inv(1) == 1);
}

TEST_CASE("degenerate table has no inverse") {
    CHECK_THROWS_WITH_AS(FiniteGroup("bad", {{0, 1}, {1, 1}}),
                         doctest::Contains("no inverse"), std::invalid_argument);
}

TEST_CASE("non-associative table rejected") {
    // commutative magma on 3 points that is not a group
    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("generators: S4 has order 24") {
    FiniteGroup s4 = group_from_generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
    CHECK(s4.order() == 24);
    CHECK_FALSE(s4.is_abelian());
}

TEST_CASE("generator closure respects the order bound") {
    CHECK_THROWS_WITH_AS(
        group_from_generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 10),
        doctest::Contains("order bound"), std::invalid_argument);
}

TEST_CASE("direct products") {
    FiniteGroup z2 = cyclic_group(2);
    FiniteGroup v4 = direct_product(z2, z2);
    CHECK(v4.order() == 4);
    for (int a = 0; a < 4; ++a) CHECK(v4.mul(a, a) == 0);  // Klein four group

    FiniteGroup z1 = cyclic_group(1);
    FiniteGroup g = direct_product(z1, v4);
    CHECK(g.order() == 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(g.mul(a, b) == v4.mul(a, b));

    // oracle: every element of Z3 x Z3 cubed is the identity
    FiniteGroup z9 = direct_product(cyclic_group(3), cyclic_group(3));
    CHECK(z9.order() == 9);
    for (int a = 0; a < 9; ++a) CHECK(z9.pow(a, 3) == 0);
}

TEST_CASE("semidirect products") {
    FiniteGroup z2 = cyclic_group(2);
    FiniteGroup v4 = direct_product(z2, z2);

    SUBCASE("swap action gives the dihedral group of order 8") {
        FiniteGroup d4 = fixtures::zm_swap_product(2);
        CHECK(d4.order() == 8);
        CHECK(d4.center().size() == 2);
        CHECK_FALSE(d4.is_abelian());
    }
    SUBCASE("inversion on Z4 gives the dihedral group of order 8") {
        FiniteGroup d4 = fixtures::dihedral8_by_inversion();
        CHECK(d4.order() == 8);
        CHECK(d4.center().size() == 2);
    }
    SUBCASE("trivial action equals the direct product element for element") {
        std::vector<std::vector<Elem>> trivial(2);
        for (int h = 0; h < 2; ++h)
            for (int x = 0; x < 4; ++x) trivial[h].push_back(x);
        FiniteGroup sd = semidirect_product(v4, z2, trivial);
        FiniteGroup dp = direct_product(v4, z2);
        CHECK(sd.table() == dp.table());
    }
    SUBCASE("non-automorphism action rejected") {
        // a bijection moving the identity cannot be multiplicative
        std::vector<std::vector<Elem>> bad(2);
        bad[0] = {0, 1, 2, 3};
        bad[1] = {1, 0, 2, 3};
        CHECK_THROWS_WITH_AS(semidirect_product(v4, z2, bad),
                             doctest::Contains("not an automorphism"),
                             std::invalid_argument);
    }
    SUBCASE("non-homomorphism action rejected") {
        // x -> 2x on Z5 has order 4, so it cannot define a Z2 action
        std::vector<std::vector<Elem>> bad(2);
        bad[0] = {0, 1, 2, 3, 4};
        bad[1] = {0, 2, 4, 1, 3};
        CHECK_THROWS_WITH_AS(semidirect_product(cyclic_group(5), z2, bad),
                             doctest::Contains("not a homomorphism"),
                             std::invalid_argument);
    }
    SUBCASE("inverse is an involution on every constructed group") {
        FiniteGroup d4 = fixtures::zm_swap_product(2);
        for (int a = 0; a < d4.order(); ++a) CHECK(d4.inv(d4.inv(a)) == a);
        FiniteGroup s4 = fixtures::symmetric4();
        for (int a = 0; a < s4.order(); ++a) CHECK(s4.inv(s4.inv(a)) == a);
    }
}

TEST_CASE("subgroup recognition") {
    FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.is_subgroup({0, 2}));
    CHECK_FALSE(z4.is_subgroup({0, 1}));
    CHECK_FALSE(z4.is_subgroup({1, 2}));
    CHECK(z4.elem_order(1) == 4);
    CHECK(z4.elem_order(2) == 2);
}
