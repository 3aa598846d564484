#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qext/fixtures.hpp"
#include "qext/matched_pair.hpp"

using namespace qext;

TEST_CASE("Kac-Paljutkin pair: beta trivial, alpha is the swap") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    CHECK(mp.n1() == 2);
    CHECK(mp.n2() == 4);
    CHECK(verify_matched_identities(mp).empty());

    for (int s = 0; s < 4; ++s)
        for (int g = 0; g < 2; ++g) CHECK(mp.beta[s][g] == g);

    // alpha_x is the coordinate swap on Z2 x Z2, which is an automorphism of
    // order two with two fixed points
    int moved = 0;
    for (int s = 0; s < 4; ++s) {
        CHECK(mp.alpha[1][mp.alpha[1][s]] == s);
        if (mp.alpha[1][s] != s) ++moved;
        CHECK(mp.alpha[0][s] == s);
    }
    CHECK(moved == 2);
}

TEST_CASE("S4 pair: both actions nontrivial") {
    MatchedPair mp = fixtures::s4_pair();
    CHECK(mp.n1() == 6);
    CHECK(mp.n2() == 4);
    CHECK(verify_matched_identities(mp).empty());

    bool alpha_moves = false, beta_moves = false;
    for (int g = 0; g < mp.n1(); ++g)
        for (int s = 0; s < mp.n2(); ++s) {
            alpha_moves = alpha_moves || mp.alpha[g][s] != s;
            beta_moves = beta_moves || mp.beta[s][g] != g;
        }
    CHECK(alpha_moves);
    CHECK(beta_moves);

    // the paper's description: alpha_s permutes the powers of the 4-cycle by
    // the permutation s itself; check it is a bijection row-wise
    for (int g = 0; g < mp.n1(); ++g) {
        std::vector<char> hit(4, 0);
        for (int s = 0; s < 4; ++s) hit[mp.alpha[g][s]] = 1;
        for (char h : hit) CHECK(h == 1);
    }
}

TEST_CASE("S4 pair: alpha permutes 4-cycle exponents by the stabilizer element") {
    // with theta(g,s) = i(g) s^-1 the exponent action reads through the point
    // reversal rho(x) = 3-x:  alpha_g(a^i) = a^{rho(g(rho(i)))}
    std::vector<Perm> elems;
    FiniteGroup s4 = group_from_generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}},
                                           FiniteGroup::kDefaultMaxOrder, &elems);
    MatchedPair mp = fixtures::s4_pair();

    Perm c = {1, 2, 3, 0};
    std::vector<int> amb_pow(4);
    Perm cur = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < s4.order(); ++i)
            if (elems[i] == cur) amb_pow[k] = i;
        Perm nx(4);
        for (int i = 0; i < 4; ++i) nx[i] = c[cur[i]];
        cur = nx;
    }
    std::vector<int> sorted = amb_pow;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> abs_of_pow(4), pow_of_abs(4);
    for (int k = 0; k < 4; ++k) {
        int a = int(std::lower_bound(sorted.begin(), sorted.end(), amb_pow[k]) -
                    sorted.begin());
        abs_of_pow[k] = a;
        pow_of_abs[a] = k;
    }
    std::vector<int> h1;
    for (int i = 0; i < s4.order(); ++i)
        if (elems[i][3] == 3) h1.push_back(i);
    std::sort(h1.begin(), h1.end());

    for (int gi = 0; gi < 6; ++gi) {
        const Perm& g = elems[h1[gi]];
        for (int i = 0; i < 4; ++i) {
            int expected = ((3 - g[(3 - i + 4) % 4]) % 4 + 4) % 4;
            CHECK(pow_of_abs[mp.alpha[gi][abs_of_pow[i]]] == expected);
        }
    }
}

TEST_CASE("degenerate factorization inputs") {
    FiniteGroup z4 = cyclic_group(4);
    CHECK_THROWS_AS(exact_factorization(z4, {0, 2}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(exact_factorization(z4, {0, 1}, {0, 2}), std::invalid_argument);

    FiniteGroup s4 = fixtures::symmetric4();
    CHECK_THROWS_WITH_AS(exact_factorization(s4, {0, 1, 2}, {0}),
                         doctest::Contains("subgroup"), std::invalid_argument);
}

TEST_CASE("trivial matched pair has trivial actions") {
    MatchedPair mp =
        trivial_matched_pair(cyclic_group(3), direct_product(cyclic_group(2), cyclic_group(2)));
    CHECK(verify_matched_identities(mp).empty());
    for (int g = 0; g < mp.n1(); ++g)
        for (int s = 0; s < mp.n2(); ++s) {
            CHECK(mp.alpha[g][s] == s);
            CHECK(mp.beta[s][g] == g);
        }
}

TEST_CASE("rho inversion is a bijection and row/column actions are bijections") {
    for (const MatchedPair& mp :
         {fixtures::kac_paljutkin_pair(), fixtures::zm_swap_pair(3), fixtures::s4_pair()}) {
        std::vector<char> seen(mp.G.order(), 0);
        for (int g = 0; g < mp.n1(); ++g)
            for (int s = 0; s < mp.n2(); ++s)
                seen[mp.G.mul(mp.j[s], mp.i[g])] = 1;
        for (char c : seen) CHECK(c == 1);

        for (int g = 0; g < mp.n1(); ++g) {
            std::vector<char> hit(mp.n2(), 0);
            for (int s = 0; s < mp.n2(); ++s) hit[mp.alpha[g][s]] = 1;
            for (char c : hit) CHECK(c == 1);
        }
        for (int s = 0; s < mp.n2(); ++s) {
            std::vector<char> hit(mp.n1(), 0);
            for (int g = 0; g < mp.n1(); ++g) hit[mp.beta[s][g]] = 1;
            for (char c : hit) CHECK(c == 1);
        }
    }
}

TEST_CASE("corrupted action table is reported with a witness") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    mp.alpha[1][1] = mp.alpha[1][1] == 1 ? 2 : 1;
    auto violations = verify_matched_identities(mp);
    CHECK_FALSE(violations.empty());
    bool names_defining_relation = false;
    for (const auto& v : violations)
        names_defining_relation =
            names_defining_relation || v.identity.find("j(alpha)") != std::string::npos;
    CHECK(names_defining_relation);
}

TEST_CASE("relabeling the ambient group conjugates the action tables") {
    MatchedPair mp = fixtures::zm_swap_pair(3);
    const int n = mp.G.order();

    // relabel the ambient elements by a bijection fixing the identity
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i == 0 ? 0 : (i % (n - 1)) + 1;
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[pi[a]][pi[b]] = pi[mp.G.mul(a, b)];
    FiniteGroup gp("relabeled", table);

    std::vector<Elem> h1p, h2p;
    for (int g = 0; g < mp.n1(); ++g) h1p.push_back(pi[mp.i[g]]);
    for (int s = 0; s < mp.n2(); ++s) h2p.push_back(pi[mp.G.inv(mp.j[s])]);
    MatchedPair mpp = exact_factorization(gp, h1p, h2p);
    CHECK(verify_matched_identities(mpp).empty());

    // abstract index correspondence induced by the sorted subgroup copies
    auto position = [](std::vector<Elem> v, Elem x) {
        std::sort(v.begin(), v.end());
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::vector<int> m1(mp.n1()), m2(mp.n2());
    for (int g = 0; g < mp.n1(); ++g) m1[g] = position(h1p, pi[mp.i[g]]);
    for (int s = 0; s < mp.n2(); ++s) m2[s] = position(h2p, pi[mp.G.inv(mp.j[s])]);

    for (int g = 0; g < mp.n1(); ++g)
        for (int s = 0; s < mp.n2(); ++s) {
            CHECK(mpp.alpha[m1[g]][m2[s]] == m2[mp.alpha[g][s]]);
            CHECK(mpp.beta[m2[s]][m1[g]] == m1[mp.beta[s][g]]);
        }
}
