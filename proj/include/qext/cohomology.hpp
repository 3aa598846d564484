#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qext/matched_pair.hpp"
#include "qext/phase.hpp"
#include "qext/zmat.hpp"

namespace qext {

// Circle-valued cocycle pair for a matched pair, stored as additive phases.
// U is indexed by G1 x G1 x G2 and V by G1 x G2 x G2.
struct CocyclePair {
    int n1 = 0, n2 = 0;
    std::vector<Phase> U;  // (g*n1 + h)*n2 + s
    std::vector<Phase> V;  // (g*n2 + s)*n2 + t

    CocyclePair() = default;
    CocyclePair(int n1_, int n2_)
        : n1(n1_), n2(n2_),
          U(static_cast<size_t>(n1_) * n1_ * n2_),
          V(static_cast<size_t>(n1_) * n2_ * n2_) {}

    Phase& u(int g, int h, int s) { return U[(static_cast<size_t>(g) * n1 + h) * n2 + s]; }
    const Phase& u(int g, int h, int s) const {
        return U[(static_cast<size_t>(g) * n1 + h) * n2 + s];
    }
    Phase& v(int g, int s, int t) { return V[(static_cast<size_t>(g) * n2 + s) * n2 + t]; }
    const Phase& v(int g, int s, int t) const {
        return V[(static_cast<size_t>(g) * n2 + s) * n2 + t];
    }

    bool operator==(const CocyclePair& o) const = default;
    // lcm of all phase denominators
    std::int64_t denominator() const;
};

CocyclePair trivial_cocycle(const MatchedPair& pair);

// Additive encoding of the compatibility equations (matrix A, one row per
// equation instance, three families in canonical lexicographic order) and of
// the coboundary map (matrix B, one column per entry of a phase table R on
// G1 x G2). The unknown vector stacks the U block before the V block; A*B = 0.
struct CocycleSystem {
    int n1 = 0, n2 = 0;
    int N = 0;  // unknowns: n1^2 n2 + n1 n2^2
    int K = 0;  // coboundary parameters: n1 n2
    IntMatrix A;
    IntMatrix B;

    int u_index(int g, int h, int s) const { return (g * n1 + h) * n2 + s; }
    int v_index(int g, int s, int t) const {
        return n1 * n1 * n2 + (g * n2 + s) * n2 + t;
    }
    int r_index(int g, int s) const { return g * n2 + s; }
};

CocycleSystem cocycle_system(const MatchedPair& pair);

// Invariant description of the group of extensions: free (torus) rank plus
// the torsion invariant-factor chain.
struct AbelianInvariants {
    int torus_rank = 0;
    std::vector<std::int64_t> invariant_factors;  // each > 1, d_i | d_{i+1}

    std::int64_t torsion_exponent() const {
        return invariant_factors.empty() ? 1 : invariant_factors.back();
    }
    std::int64_t torsion_order() const {
        std::int64_t p = 1;
        for (auto f : invariant_factors) p *= f;
        return p;
    }
};

// The group of extensions, computed as the Pontryagin dual of the integer
// homology ker(B^T)/im(A^T).
AbelianInvariants extension_group(const MatchedPair& pair);

struct CocycleViolation {
    int equation;             // 1, 2 or 3
    std::vector<Elem> args;   // argument tuple of the failing instance
    Phase residual;
};

std::vector<CocycleViolation> is_cocycle(const MatchedPair& pair, const CocyclePair& c);

// Coboundary of a phase table R (length n1*n2), added to c.
CocyclePair coboundary_shift(const MatchedPair& pair, const CocyclePair& c,
                             const std::vector<Phase>& R);

struct CohomologyWitness {
    bool cohomologous = false;
    std::vector<Phase> R;       // witness table when cohomologous
    std::string detail;
};

// Decides whether c1 - c2 is a coboundary; on success the witness satisfies
// c1 == coboundary_shift(pair, c2, R).
CohomologyWitness are_cohomologous(const MatchedPair& pair, const CocyclePair& c1,
                                   const CocyclePair& c2);

// Cohomologous representative with U(g,e,s) = U(e,g,s) = 0 and V(e,s,t) = 0.
// The normalizing coboundary is chosen so that the derived tables of the
// operator module also collapse: V(g,e,t) = V(g,s,e) = 0 and U(g,h,e) = 0.
CocyclePair normalize_cocycle(const MatchedPair& pair, const CocyclePair& c);

struct RepresentativeSet {
    std::vector<CocyclePair> reps;  // pairwise non-cohomologous, trivial class first
    bool complete = false;          // true iff these exhaust the group of extensions
    AbelianInvariants gamma;
};

// One representative per extension class of order dividing d, all with
// denominator dividing d. Requires d to be a multiple of the torsion exponent
// for a complete listing; otherwise the returned set is marked incomplete.
RepresentativeSet cocycle_representatives(const MatchedPair& pair, std::int64_t d);

}  // namespace qext
