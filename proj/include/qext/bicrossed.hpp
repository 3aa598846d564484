#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qext/cohomology.hpp"
#include "qext/cyclotomic.hpp"
#include "qext/matched_pair.hpp"
#include "qext/phase_perm.hpp"

namespace qext {

struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when the check passes
};

// Bicrossed-product quantum group of a matched pair with a normalized cocycle
// pair. The Hilbert space is C[G1 x G2] with basis index g*|G2| + s; the two
// fundamental unitaries act on H (x) H and every axiom check is exact.
struct FiniteQG {
    MatchedPair pair;
    CocyclePair cocycle;  // normalized
    int n = 0;            // |G1| * |G2|
    std::shared_ptr<const CycloField> field;

    PhasePermOperator What;  // dual fundamental unitary on H (x) H
    PhasePermOperator W;     // = Sigma What* Sigma

    // one-variable tables collapsing the cocycles at unit arguments:
    //   Ut(g,s) = U(g, g^-1, s),  Vt(g,s) = V(g, s^-1, s)
    std::vector<std::vector<Phase>> Ut, Vt;
    Antiunitary J, Jhat;

    int hidx(Elem g, Elem s) const { return g * pair.n2() + s; }
    Elem hg(int x) const { return x / pair.n2(); }
    Elem hs(int x) const { return x % pair.n2(); }
};

// Requires the cocycle to be normalized (see normalize_cocycle); verified.
FiniteQG build_qg(const MatchedPair& pair, const CocyclePair& cocycle);

// Dual fundamental unitary from the kernel formula
//   (What xi)(g,s,h,t) = conj U(b, b^-1 h, t) V(g, s, alpha_{b^-1 h}(t))
//                        * xi(g, alpha_{b^-1 h}(t) s, b^-1 h, t),  b = beta_s(g)
PhasePermOperator build_w_hat(const MatchedPair& pair, const CocyclePair& cocycle);

// Trivial-cocycle version of the above (a pure permutation).
PhasePermOperator build_w_hat_0(const MatchedPair& pair);

// W12 W13 W23 = W23 W12 on n^3 basis states; nullopt on success, witness
// basis state index on failure.
std::optional<int> pentagon_check(const PhasePermOperator& w);

// Diagonal cocycle twist: Theta * What_0 = What. The report also checks the
// multiplicativity functional equation of Theta at every argument tuple.
struct ThetaReport {
    PhasePermOperator theta;  // diagonal on H (x) H
    bool matches_w_hat = false;
    std::optional<std::array<int, 6>> mu_violation;  // (g,s,h,t,k,r)
};
ThetaReport theta_operator(const MatchedPair& pair, const CocyclePair& cocycle);

// Standalone multiplicativity test for an arbitrary diagonal twist given as a
// phase table over (g,s,h,t).
std::optional<std::array<int, 6>> theta_mu_check(const MatchedPair& pair,
                                                 const std::vector<Phase>& theta);

// Representation of the function algebra on H: coefficient tables are indexed
// by (g,s) like H itself.
CMatrix pi_of(const FiniteQG& qg, const std::vector<Cyc>& f);
CMatrix pi_basis(const FiniteQG& qg, Elem g, Elem s);  // pi of a delta table
std::vector<Cyc> extract_coefficients(const FiniteQG& qg, const CMatrix& z);

// Haar functional phi(pi(f)) = sum_s f(e,s). Throws if z is not in the image
// of pi (extract/rebuild mismatch).
Cyc haar(const FiniteQG& qg, const CMatrix& z);

CMatrix comultiplication(const FiniteQG& qg, const CMatrix& z);  // W*(1 (x) z)W

// (iota (x) phi) Delta(z) == phi(z) 1 for every basis element z.
AxiomCheck haar_left_invariance(const FiniteQG& qg);

// Independent characterization: the linear system of left-invariance
// equations has a one-dimensional solution space spanned by phi.
AxiomCheck haar_uniqueness_oracle(const FiniteQG& qg);

// (Delta (x) iota)(W) = W13 W23 and Delta(alpha(x)) = (alpha (x) alpha) Delta2(x).
std::vector<AxiomCheck> comultiplication_check(const FiniteQG& qg);

// J, Jhat involutions, the commutation of W with them, Delta R = sigma (R (x) R) Delta,
// the antipode involution, and the one-variable table symmetries.
std::vector<AxiomCheck> modular_structure_check(const FiniteQG& qg);

// unitary antipode R(z) = Jhat z* Jhat
CMatrix unitary_antipode(const FiniteQG& qg, const CMatrix& z);

// Dual quantum group: roles of the factors exchanged, cocycles transposed.
// Appends structural checks (flip relation, biduality, dimensions) if a
// report pointer is given.
FiniteQG dual_build(const FiniteQG& qg, std::vector<AxiomCheck>* report = nullptr);

// Diagonal operator on H from a phase table over (g,s).
PhasePermOperator diagonal_on_h(const MatchedPair& pair, const std::vector<Phase>& table);

// Everything above in one list (used by the CLI verify subcommand).
std::vector<AxiomCheck> full_axiom_suite(const FiniteQG& qg);

}  // namespace qext
