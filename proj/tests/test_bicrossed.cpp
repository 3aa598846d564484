#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qext/bicrossed.hpp"
#include "qext/fixtures.hpp"

using namespace qext;

namespace {

std::vector<CocyclePair> kp_classes() {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    RepresentativeSet reps = cocycle_representatives(mp, 2);
    std::vector<CocyclePair> out;
    for (const auto& c : reps.reps) out.push_back(normalize_cocycle(mp, c));
    return out;
}

}  // namespace

TEST_CASE("trivial pair: What reduces to the group unitary of G1") {
    // G2 trivial: (What xi)(g,h) = xi(g, g^-1 h), a pure permutation
    MatchedPair mp = trivial_matched_pair(fixtures::symmetric4(), cyclic_group(1));
    PhasePermOperator w = build_w_hat(mp, trivial_cocycle(mp));
    const FiniteGroup& g1 = mp.G1;
    const int n = g1.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            // kernel form: basis vector (g,h) comes from (g, g h)
            CHECK(w.perm[g * n + h] == g * n + g1.mul(g, h));
            CHECK(w.phase[g * n + h].is_zero());
        }
}

TEST_CASE("Kac-Paljutkin classes: unitary structure of What") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    auto classes = kp_classes();
    REQUIRE(classes.size() == 2);

    PhasePermOperator w0 = build_w_hat(mp, classes[0]);
    for (const auto& p : w0.phase) CHECK(p.is_zero());  // trivial class: pure perm

    PhasePermOperator w1 = build_w_hat(mp, classes[1]);
    bool has_half = false;
    for (const auto& p : w1.phase) {
        CHECK((p.den == 1 || p.den == 2));
        has_half = has_half || p.den == 2;
    }
    CHECK(has_half);
}

TEST_CASE("pentagon holds for every representative, fails when perturbed") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    for (const auto& c : kp_classes()) {
        FiniteQG qg = build_qg(mp, c);
        CHECK_FALSE(pentagon_check(qg.W).has_value());
        CHECK_FALSE(pentagon_check(qg.What).has_value());

        PhasePermOperator bad = qg.W;
        bad.phase[5] += Phase(1, 2);
        CHECK(pentagon_check(bad).has_value());
    }
}

TEST_CASE("theta twist: correspondence with the cocycle equations") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    auto classes = kp_classes();

    SUBCASE("trivial cocycle gives the identity twist") {
        ThetaReport rep = theta_operator(mp, classes[0]);
        CHECK(rep.theta.is_identity());
        CHECK(rep.matches_w_hat);
        CHECK_FALSE(rep.mu_violation.has_value());
    }
    SUBCASE("nontrivial class gives a multiplicative twist") {
        ThetaReport rep = theta_operator(mp, classes[1]);
        CHECK_FALSE(rep.theta.is_identity());
        CHECK(rep.matches_w_hat);
        CHECK_FALSE(rep.mu_violation.has_value());
    }
    SUBCASE("non-cocycle tables violate the twist equation") {
        CocyclePair bad = classes[1];
        bad.u(1, 1, 2) += Phase(1, 2);
        REQUIRE_FALSE(is_cocycle(mp, bad).empty());
        // build the twist table from the same kernel formula and test it
        const int n1 = mp.n1(), n2 = mp.n2();
        std::vector<Phase> th(n1 * n2 * n1 * n2);
        for (int g = 0; g < n1; ++g)
            for (int s = 0; s < n2; ++s)
                for (int h = 0; h < n1; ++h)
                    for (int t = 0; t < n2; ++t) {
                        Elem b = mp.beta[s][g];
                        Elem hp = mp.G1.mul(mp.G1.inv(b), h);
                        th[((g * n2 + s) * n1 + h) * n2 + t] =
                            -bad.u(b, hp, t) + bad.v(g, s, mp.alpha[hp][t]);
                    }
        CHECK(theta_mu_check(mp, th).has_value());
    }
}

TEST_CASE("representation pi and the Haar functional") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    for (const auto& c : kp_classes()) {
        FiniteQG qg = build_qg(mp, c);
        const CycloField& F = *qg.field;

        SUBCASE("pi(indicator of g = e) is the identity") {
            std::vector<Cyc> f(qg.n, Cyc::zero(F));
            for (int s = 0; s < mp.n2(); ++s) f[qg.hidx(0, s)] = Cyc::one(F);
            CHECK(pi_of(qg, f) == CMatrix::identity(F, qg.n));
        }
        SUBCASE("extract inverts pi on all basis tables") {
            for (int j = 0; j < qg.n; ++j) {
                CMatrix z = pi_basis(qg, qg.hg(j), qg.hs(j));
                std::vector<Cyc> f = extract_coefficients(qg, z);
                for (int k = 0; k < qg.n; ++k)
                    CHECK(f[k] == (k == j ? Cyc::one(F) : Cyc::zero(F)));
            }
        }
        SUBCASE("products match the convolution formula") {
            // oracle: dense matrix product of pi(f1) pi(f2) equals pi(f3)
            // with the twisted convolution
            std::mt19937_64 rng(99);
            for (int trial = 0; trial < 4; ++trial) {
                int j1 = int(rng() % qg.n), j2 = int(rng() % qg.n);
                CMatrix prod = pi_basis(qg, qg.hg(j1), qg.hs(j1)) *
                               pi_basis(qg, qg.hg(j2), qg.hs(j2));
                std::vector<Cyc> f3(qg.n, Cyc::zero(F));
                for (int h = 0; h < mp.n1(); ++h)
                    for (int s = 0; s < mp.n2(); ++s) {
                        Cyc acc = Cyc::zero(F);
                        for (int g = 0; g < mp.n1(); ++g) {
                            Elem gi = mp.G1.mul(mp.G1.inv(g), h);
                            Cyc f1 = (qg.hidx(g, mp.alpha[gi][s]) == j1)
                                         ? Cyc::one(F)
                                         : Cyc::zero(F);
                            Cyc f2 = (qg.hidx(gi, s) == j2) ? Cyc::one(F) : Cyc::zero(F);
                            acc += Cyc::from_phase(F, -qg.cocycle.u(g, gi, s)) * f1 * f2;
                        }
                        f3[qg.hidx(h, s)] = acc;
                    }
                CHECK(prod == pi_of(qg, f3));
            }
        }
        SUBCASE("haar values on basis elements") {
            CMatrix id = CMatrix::identity(F, qg.n);
            CHECK(haar(qg, id) == Cyc::from_rational(F, mpq_class(mp.n2())));
            for (int j = 0; j < qg.n; ++j) {
                Cyc v = haar(qg, pi_basis(qg, qg.hg(j), qg.hs(j)));
                if (qg.hg(j) == 0)
                    CHECK(v == Cyc::one(F));
                else
                    CHECK(v.is_zero());
            }
        }
        SUBCASE("haar rejects operators outside the image of pi") {
            CMatrix junk(F, qg.n, qg.n);
            junk.set(0, qg.n - 1, Cyc::one(F));
            junk.set(1, 0, Cyc::one(F));
            CHECK_THROWS_AS(haar(qg, junk), std::invalid_argument);
        }
        SUBCASE("left invariance and uniqueness oracle") {
            CHECK(haar_left_invariance(qg).pass);
            CHECK(haar_uniqueness_oracle(qg).pass);
        }
    }
}

TEST_CASE("comultiplication checks pass; corrupted W fails") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    for (const auto& c : kp_classes()) {
        FiniteQG qg = build_qg(mp, c);
        for (const auto& ch : comultiplication_check(qg)) CHECK(ch.pass);

        FiniteQG broken = qg;
        broken.W.phase[3] += Phase(1, 2);
        bool some_fail = false;
        for (const auto& ch : comultiplication_check(broken))
            some_fail = some_fail || !ch.pass;
        CHECK(some_fail);
    }
}

TEST_CASE("modular structures") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    for (const auto& c : kp_classes()) {
        FiniteQG qg = build_qg(mp, c);
        for (const auto& ch : modular_structure_check(qg)) {
            INFO(ch.name, " ", ch.witness);
            CHECK(ch.pass);
        }
    }
    SUBCASE("trivial cocycle: J is plain conjugation with the coordinate flip") {
        FiniteQG qg = build_qg(mp, trivial_cocycle(mp));
        for (int g = 0; g < mp.n1(); ++g)
            for (int s = 0; s < mp.n2(); ++s) {
                int x = qg.hidx(g, s);
                CHECK(qg.J.linear.phase[x].is_zero());
                // linear part maps e_{(g,s)} to e_{(g^-1, alpha_g(s))}
                CHECK(qg.J.linear.perm[qg.hidx(mp.G1.inv(g), mp.alpha[g][s])] == x);
            }
    }
}

TEST_CASE("S4 pair and swap pairs: full suite on the split extension") {
    for (const MatchedPair& mp : {fixtures::s4_pair(), fixtures::zm_swap_pair(3)}) {
        FiniteQG qg = build_qg(mp, trivial_cocycle(mp));
        for (const auto& ch : full_axiom_suite(qg)) {
            INFO(ch.name, " ", ch.witness);
            CHECK(ch.pass);
        }
    }
}

TEST_CASE("duality") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    for (const auto& c : kp_classes()) {
        FiniteQG qg = build_qg(mp, c);
        std::vector<AxiomCheck> checks;
        FiniteQG dual = dual_build(qg, &checks);
        for (const auto& ch : checks) {
            INFO(ch.name, " ", ch.witness);
            CHECK(ch.pass);
        }
        CHECK(dual.n == qg.n);
        // beta-trivial pair dualizes to an alpha-trivial structure
        for (int s = 0; s < dual.pair.n1(); ++s)
            for (int g = 0; g < dual.pair.n2(); ++g)
                CHECK(dual.pair.alpha[s][g] == mp.beta[s][g]);
    }
}

TEST_CASE("cohomologous cocycles give conjugate fundamental unitaries") {
    MatchedPair mp = fixtures::kac_paljutkin_pair();
    auto classes = kp_classes();
    std::mt19937_64 rng(41);

    for (const auto& base : classes) {
        // shift supported away from the unit rows/columns keeps the result
        // normalized
        std::vector<Phase> r(mp.n1() * mp.n2());
        for (int g = 1; g < mp.n1(); ++g)
            for (int s = 1; s < mp.n2(); ++s)
                r[g * mp.n2() + s] = Phase(long(rng() % 4), 4);
        CocyclePair other = coboundary_shift(mp, base, r);
        REQUIRE(is_cocycle(mp, other).empty());

        CohomologyWitness w = are_cohomologous(mp, other, base);
        REQUIRE(w.cohomologous);

        FiniteQG qa = build_qg(mp, base);
        FiniteQG qb = build_qg(mp, other);
        PhasePermOperator rr = diagonal_on_h(mp, w.R);
        PhasePermOperator conj = tensor(rr, rr) * qa.W * tensor(rr, rr).adjoint();
        CHECK_FALSE(first_difference(conj, qb.W).has_value());
    }
}
