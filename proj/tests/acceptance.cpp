// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and runtime budgets are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qext/bicrossed.hpp"
#include "qext/cohomology.hpp"
#include "qext/continuous.hpp"
#include "qext/fixtures.hpp"

using namespace qext;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over budget ") +
                std::to_string(budget_s) + " s";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %02d (%7.2f s): %s%s%s\n", ok ? "PASS" : "FAIL", id, secs,
                label.c_str(), note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

struct Fixture {
    std::string name;
    MatchedPair pair;
    std::vector<CocyclePair> classes;  // normalized representatives
};

std::vector<Fixture>& fixture_bank() {
    static std::vector<Fixture> bank = [] {
        std::vector<Fixture> out;
        auto add = [&](const std::string& name, MatchedPair mp, std::int64_t d) {
            RepresentativeSet reps = cocycle_representatives(mp, d);
            Fixture f{name, std::move(mp), {}};
            for (const auto& c : reps.reps)
                f.classes.push_back(normalize_cocycle(f.pair, c));
            out.push_back(std::move(f));
        };
        add("kp", fixtures::kac_paljutkin_pair(), 2);
        add("z3", fixtures::zm_swap_pair(3), 3);
        add("z4", fixtures::zm_swap_pair(4), 4);
        add("s4", fixtures::s4_pair(), 1);
        return out;
    }();
    return bank;
}

bool all_pass(const std::vector<AxiomCheck>& checks, std::string& note,
              const std::string& ctx) {
    for (const auto& c : checks)
        if (!c.pass) {
            note = ctx + ": " + c.name + " " + c.witness;
            return false;
        }
    return true;
}

}  // namespace

int main() {
    criterion(1, "Kac-Paljutkin extension group is Z/2", 5.0, [](std::string& note) {
        AbelianInvariants g = extension_group(fixtures::kac_paljutkin_pair());
        note = "torus_rank " + std::to_string(g.torus_rank);
        return g.torus_rank == 0 && g.invariant_factors == std::vector<std::int64_t>{2};
    });

    criterion(2, "swap family: Gamma = Z/m for m = 2,3,4", 60.0, [](std::string& note) {
        for (std::int64_t m : {2, 3, 4}) {
            AbelianInvariants g = extension_group(fixtures::zm_swap_pair(int(m)));
            if (g.torus_rank != 0 || g.invariant_factors != std::vector<std::int64_t>{m}) {
                note = "m = " + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    criterion(3, "S4 pair: trivial extension group", 0, [](std::string& note) {
        AbelianInvariants g = extension_group(fixtures::s4_pair());
        (void)note;
        return g.torus_rank == 0 && g.invariant_factors.empty();
    });

    criterion(4, "pentagon and Hopf suite on every class", 60.0, [](std::string& note) {
        for (const Fixture& f : fixture_bank()) {
            for (size_t k = 0; k < f.classes.size(); ++k) {
                FiniteQG qg = build_qg(f.pair, f.classes[k]);
                std::string ctx = f.name + "#" + std::to_string(k);
                if (pentagon_check(qg.W)) {
                    note = ctx + ": pentagon";
                    return false;
                }
                if (!all_pass(comultiplication_check(qg), note, ctx)) return false;
                AxiomCheck inv = haar_left_invariance(qg);
                if (!inv.pass) {
                    note = ctx + ": " + inv.witness;
                    return false;
                }
                if (!all_pass(modular_structure_check(qg), note, ctx)) return false;
            }
        }
        // negative controls on the nontrivial Kac-Paljutkin class
        const Fixture& kp = fixture_bank()[0];
        FiniteQG qg = build_qg(kp.pair, kp.classes[1]);
        FiniteQG bad = qg;
        bad.W.phase[7] += Phase(1, 2);
        if (!pentagon_check(bad.W)) {
            note = "perturbed W still satisfies the pentagon";
            return false;
        }
        bool w13_fails = false;
        for (const auto& c : comultiplication_check(bad))
            if (c.name.rfind("(Delta", 0) == 0) w13_fails = !c.pass;
        if (!w13_fails) {
            note = "perturbed W passes (Delta x iota)(W) = W13 W23";
            return false;
        }
        // diagonal phase errors cancel pairwise both in the intertwiner and
        // in the invariance slices, so those controls perturb the permutation
        FiniteQG badp = qg;
        std::swap(badp.W.perm[7], badp.W.perm[8]);
        bool alpha_fails = false;
        for (const auto& c : comultiplication_check(badp))
            if (c.name.rfind("Delta alpha", 0) == 0) alpha_fails = !c.pass;
        if (!alpha_fails) {
            note = "perturbed W passes the alpha intertwiner";
            return false;
        }
        if (haar_left_invariance(badp).pass) {
            note = "perturbed W passes left invariance";
            return false;
        }
        FiniteQG badj = qg;
        std::swap(badj.Jhat.linear.perm[2], badj.Jhat.linear.perm[5]);
        bool dr_fails = false, slice_fails = false;
        for (const auto& c : modular_structure_check(badj)) {
            if (c.name.rfind("Delta R", 0) == 0) dr_fails = !c.pass;
            if (c.name.rfind("S((iota", 0) == 0) slice_fails = !c.pass;
        }
        if (!dr_fails || !slice_fails) {
            note = "perturbed Jhat passes the antipode checks";
            return false;
        }
        // the sandwich form makes S^2 = 1 formally; the control for the
        // involution check is a candidate antipode of the wrong shape
        PhasePermOperator q(qg.n);
        std::swap(q.perm[0], q.perm[5]);
        CMatrix qm = q.matrix(*qg.field), qmi = q.adjoint().matrix(*qg.field);
        bool s2_fails = false;
        for (int j = 0; j < qg.n && !s2_fails; ++j) {
            CMatrix z = pi_basis(qg, qg.hg(j), qg.hs(j));
            auto wrong = [&](const CMatrix& x) {
                return qm * unitary_antipode(qg, x) * qmi;
            };
            s2_fails = wrong(wrong(z)) != z;
        }
        if (!s2_fails) {
            note = "wrong-shape antipode candidate is still involutive";
            return false;
        }
        return true;
    });

    criterion(5, "theta twist correspondence on every class", 0, [](std::string& note) {
        for (const Fixture& f : fixture_bank()) {
            for (size_t k = 0; k < f.classes.size(); ++k) {
                ThetaReport rep = theta_operator(f.pair, f.classes[k]);
                if (!rep.matches_w_hat || rep.mu_violation) {
                    note = f.name + "#" + std::to_string(k);
                    return false;
                }
            }
        }
        // a non-cocycle pair must fail the twist equation
        const Fixture& kp = fixture_bank()[0];
        CocyclePair bad = kp.classes[1];
        bad.u(1, 1, 2) += Phase(1, 2);
        const MatchedPair& mp = kp.pair;
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
        if (!theta_mu_check(mp, th)) {
            note = "non-cocycle twist satisfies the functional equation";
            return false;
        }
        return true;
    });

    criterion(6, "cohomologous cocycles conjugate by the witness diagonal", 0,
              [](std::string& note) {
        std::uint64_t rng = 2024;
        for (const Fixture* f : {&fixture_bank()[0], &fixture_bank()[1]}) {
            for (const CocyclePair& base : f->classes) {
                const MatchedPair& mp = f->pair;
                std::vector<Phase> r(mp.n1() * mp.n2());
                for (int g = 1; g < mp.n1(); ++g)
                    for (int s = 1; s < mp.n2(); ++s)
                        r[g * mp.n2() + s] =
                            Phase(long(uniform(rng, 0, 12)), 12);
                CocyclePair other = coboundary_shift(mp, base, r);
                CohomologyWitness w = are_cohomologous(mp, other, base);
                if (!w.cohomologous) {
                    note = f->name + ": witness not found";
                    return false;
                }
                FiniteQG qa = build_qg(mp, base);
                FiniteQG qb = build_qg(mp, other);
                PhasePermOperator rr = diagonal_on_h(mp, w.R);
                PhasePermOperator conj = tensor(rr, rr) * qa.W * tensor(rr, rr).adjoint();
                if (first_difference(conj, qb.W)) {
                    note = f->name + ": conjugation mismatch";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(7, "Haar formula is the unique invariant functional", 0,
              [](std::string& note) {
        for (const Fixture& f : fixture_bank()) {
            for (size_t k = 0; k < f.classes.size(); ++k) {
                FiniteQG qg = build_qg(f.pair, f.classes[k]);
                AxiomCheck c = haar_uniqueness_oracle(qg);
                if (!c.pass) {
                    note = f.name + "#" + std::to_string(k) + ": " + c.witness;
                    return false;
                }
            }
        }
        return true;
    });

    criterion(8, "ax+b example: closed forms at 1e4 points", 5.0, [](std::string& note) {
        SampleReport rep = axb_example_check(10000, 271828);
        note = "max residual " + std::to_string(rep.worst());
        return rep.pass && rep.samples == 10000;
    });

    criterion(9, "triangular example: closed forms at 1e4 points", 5.0,
              [](std::string& note) {
        SampleReport rep = sl2_example_check(10000, 314159);
        note = "max residual " + std::to_string(rep.worst());
        return rep.pass && rep.samples == 10000;
    });

    criterion(10, "principal values and the quantized family", 120.0,
              [](std::string& note) {
        SampleReport pv = pv_value_check(100, 999);
        if (!pv.pass) {
            note = "pv bank max residual " + std::to_string(pv.worst());
            return false;
        }
        SampleReport qz = quantization_check(20, {-2, -1, 0, 1, 2}, 777);
        note = "lambda=1 min residual " +
               std::to_string(qz.max_residual.at("lambda_one_min"));
        return qz.pass;
    });

    criterion(11, "functional equation residuals at 1e3 points", 0,
              [](std::string& note) {
        std::uint64_t rng = 55;
        auto flam = [](double lam) {
            return [lam](double a, double b, double c, double) {
                return lam * b * std::log(c) / (a * c * c);
            };
        };
        auto triv = [](double (*B)(double, double)) {
            return [B](double a, double b, double c, double d) {
                return B(a, b) / (c * c) + B(c, d) - B(a * c, a * d + b / c);
            };
        };
        std::vector<std::function<double(double, double, double, double)>> sols = {
            flam(4.0 / M_PI),
            triv(+[](double a, double b) { return a * b; }),
            triv(+[](double a, double b) { return a * a - 2 * b; }),
            triv(+[](double a, double b) { return std::log(a) + b * b; })};
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            std::array<double, 6> p = {std::exp(uniform(rng, -1, 1)),
                                       uniform(rng, -2, 2),
                                       std::exp(uniform(rng, -1, 1)),
                                       uniform(rng, -2, 2),
                                       std::exp(uniform(rng, -1, 1)),
                                       uniform(rng, -2, 2)};
            for (const auto& fn : sols) worst = std::max(worst, star1_residual(fn, p));
        }
        note = "max residual " + std::to_string(worst);
        return worst < 1e-12;
    });

    criterion(12, "infinitesimal structure constants", 0, [](std::string& note) {
        SampleReport rep = infinitesimal_check(1e-4);
        double worst = 0;
        for (const auto& [k, v] : rep.max_residual)
            if (k.rfind("chi_", 0) != 0) worst = std::max(worst, v);
        note = "max residual " + std::to_string(worst);
        return rep.pass;
    });

    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures ? 1 : 0;
}
