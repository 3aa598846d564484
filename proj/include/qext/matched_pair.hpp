#pragma once

#include <string>
#include <vector>

#include "qext/group.hpp"

namespace qext {

// Exact factorization G = H1 * H2 with H1 meet H2 = {e}, together with the
// derived mutual actions. The embedding of the second factor is the
// anti-homomorphism j(s) = inclusion(s)^-1, so theta(g,s) = i(g) j(s) is a
// bijection of G1 x G2 onto G exactly when the factorization is exact.
//
// The defining relation for the actions is
//   j(alpha[g][s]) * i(beta[s][g]) = i(g) * j(s)   for all (g,s).
struct MatchedPair {
    FiniteGroup G;       // ambient
    FiniteGroup G1, G2;  // abstract copies of the two factors
    std::vector<Elem> i;    // G1 -> G, injective homomorphism
    std::vector<Elem> j;    // G2 -> G, injective anti-homomorphism
    std::vector<std::vector<Elem>> alpha;  // alpha[g][s] in G2
    std::vector<std::vector<Elem>> beta;   // beta[s][g] in G1

    int n1() const { return G1.order(); }
    int n2() const { return G2.order(); }

    Elem act_alpha(Elem g, Elem s) const { return alpha[g][s]; }
    Elem act_beta(Elem s, Elem g) const { return beta[s][g]; }
};

struct IdentityViolation {
    std::string identity;   // which law failed
    std::vector<Elem> args; // witness tuple
};

MatchedPair exact_factorization(const FiniteGroup& G, const std::vector<Elem>& h1,
                                const std::vector<Elem>& h2,
                                const std::string& name = "");

// Exhaustive check of the compatibility laws of the two actions:
//   alpha_{hg}(s) = alpha_h(alpha_g(s))      beta_s(hg) = beta_{alpha_g(s)}(h) beta_s(g)
//   beta_{ts}(g)  = beta_t(beta_s(g))        alpha_g(ts) = alpha_{beta_s(g)}(t) alpha_g(s)
//   alpha_g(e) = e   alpha_e(s) = s   beta_s(e) = e   beta_e(g) = g
// plus the defining relation itself. Violations are reported, not thrown.
std::vector<IdentityViolation> verify_matched_identities(const MatchedPair& pair);

// Matched pair with both actions trivial, from two abstract groups.
MatchedPair trivial_matched_pair(const FiniteGroup& G1, const FiniteGroup& G2);

}  // namespace qext
