#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qext {

// Dense integer matrix over GMP integers, row-major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> e;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n);

    mpz_class& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const {
        return e[static_cast<size_t>(i) * cols + j];
    }

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix transpose(const IntMatrix& A);
bool is_zero(const IntMatrix& A);

// Fraction-free determinant (Bareiss); used to certify unimodularity in tests.
mpz_class det_bareiss(IntMatrix M);

// L*M*R = S with S diagonal, diag entries positive with d1 | d2 | ..., and
// L, R unimodular. Linv, Rinv are maintained alongside so callers can change
// coordinates in both directions without inverting anything.
struct SnfResult {
    IntMatrix S;
    IntMatrix L, Linv;  // rows x rows
    IntMatrix R, Rinv;  // cols x cols
    int rank = 0;
    std::vector<mpz_class> divisors;  // the rank nonzero invariant factors
};

SnfResult smith_normal_form(IntMatrix M, bool with_transforms = true);

// Incremental Hermite-style accumulator for the lattice generated by inserted
// rows. When a modulus m is given the accumulator behaves as if m*I had been
// inserted first, so every entry may be reduced mod m (keeps entries tiny for
// the mod-d kernel computations).
class RowHnf {
  public:
    explicit RowHnf(int n, std::optional<mpz_class> modulus = std::nullopt);

    void insert(std::vector<mpz_class> v);
    void insert_row(const IntMatrix& A, int i);

    int rank() const;
    // Basis of the accumulated lattice, one row per pivot, size-reduced.
    IntMatrix basis();

  private:
    void size_reduce();

    int n_;
    std::optional<mpz_class> mod_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[j] has pivot at column j
};

// Full-rank basis of the lattice {x in Z^n : A*x == 0 (mod d)}, returned as
// basis = R * diag(c): column j of R scaled by c[j]. The lattice contains
// d*Z^n by construction. Rinv is the inverse of R.
struct ModKernelLattice {
    IntMatrix R, Rinv;
    std::vector<mpz_class> c;

    IntMatrix basis() const;
};

ModKernelLattice kernel_mod(const IntMatrix& A, const mpz_class& d);

// Invariant factors of the quotient of two full-rank lattices inner <= outer,
// both given as ModKernelLattice. Returns generators (columns, as vectors in
// Z^n) with their orders > 1; the quotient is the direct sum of Z/order_j.
struct LatticeQuotient {
    std::vector<std::vector<mpz_class>> generators;
    std::vector<mpz_class> orders;  // parallel to generators, each > 1
};

LatticeQuotient lattice_quotient(const ModKernelLattice& outer,
                                 const ModKernelLattice& inner);

}  // namespace qext
