#pragma once

#include <optional>
#include <vector>

#include "qext/cyclotomic.hpp"
#include "qext/phase.hpp"

namespace qext {

// Unitary acting as e_i -> exp(2 pi i phase[i]) e_{perm[i]}. Closed under
// composition, adjoint and tensor legs, so all operator identities of the
// finite pipeline stay exact.
struct PhasePermOperator {
    int dim = 0;
    std::vector<int> perm;
    std::vector<Phase> phase;

    PhasePermOperator() = default;
    explicit PhasePermOperator(int n);

    static PhasePermOperator identity(int n);
    // the flip on C^n (x) C^n
    static PhasePermOperator flip(int n);
    // diagonal operator with the given phases
    static PhasePermOperator diagonal(std::vector<Phase> phases);

    bool is_identity() const;
    bool operator==(const PhasePermOperator& o) const = default;

    PhasePermOperator operator*(const PhasePermOperator& o) const;  // this after o
    PhasePermOperator adjoint() const;
    PhasePermOperator conj_phases() const;  // entrywise complex conjugate

    CMatrix matrix(const CycloField& f) const;
};

PhasePermOperator tensor(const PhasePermOperator& a, const PhasePermOperator& b);

// Leg embeddings of an operator on H (x) H into H (x) H (x) H, dim(H) = n.
PhasePermOperator leg12(const PhasePermOperator& w, int n);
PhasePermOperator leg23(const PhasePermOperator& w, int n);
PhasePermOperator leg13(const PhasePermOperator& w, int n);

// Build from kernel form (P xi)(x) = c(x) * xi(sigma(x)): sigma must be a
// bijection of [0, dim).
PhasePermOperator from_kernel(int dim, const std::vector<int>& sigma,
                              const std::vector<Phase>& c);

// first index where the two operators differ, if any
std::optional<int> first_difference(const PhasePermOperator& a,
                                    const PhasePermOperator& b);

// Antiunitary A = linear o C with C entrywise conjugation in the standard
// basis; A is an involution iff linear * conj_phases(linear) = 1.
struct Antiunitary {
    PhasePermOperator linear;

    bool is_involution() const {
        return (linear * linear.conj_phases()).is_identity();
    }
    // A M A as a linear map (two conjugations cancel)
    CMatrix sandwich(const CMatrix& m) const;
};

}  // namespace qext
