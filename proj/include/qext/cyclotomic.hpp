#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "qext/phase.hpp"

namespace qext {

// The cyclotomic field Q(zeta_L) in the power basis 1, zeta, ..., zeta^{d-1}
// with d = phi(L); reduction is modulo the L-th cyclotomic polynomial, so
// equality of field elements is exact equality of coefficient vectors.
class CycloField {
  public:
    explicit CycloField(long L);

    long order() const { return L_; }
    int degree() const { return deg_; }

    // coefficients of zeta^k (any k, reduced mod L) in the power basis
    const std::vector<mpq_class>& zeta_pow(long k) const;

  private:
    long L_;
    int deg_;
    std::vector<std::vector<mpq_class>> pow_;  // x^k mod Phi_L, k in [0, max(L, 2d-1))
};

// Element of Q(zeta_L). All arithmetic is exact.
struct Cyc {
    const CycloField* F = nullptr;
    std::vector<mpq_class> a;

    Cyc() = default;
    explicit Cyc(const CycloField& f) : F(&f), a(f.degree()) {}

    static Cyc zero(const CycloField& f) { return Cyc(f); }
    static Cyc one(const CycloField& f);
    static Cyc from_rational(const CycloField& f, const mpq_class& q);
    static Cyc from_phase(const CycloField& f, const Phase& p);  // exp(2 pi i p)

    bool is_zero() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc conj() const;     // complex conjugation, zeta -> zeta^{-1}
    Cyc inverse() const;  // fails on zero
    std::pair<double, double> approx() const;  // (re, im), for diagnostics
};

// Sparse matrix over Q(zeta_L); rows -> (col -> value), zero entries erased.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(const CycloField& f, int rows, int cols) : F_(&f), rows_(rows), cols_(cols) {}

    static CMatrix identity(const CycloField& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CycloField& field() const { return *F_; }

    void set(int i, int j, Cyc v);
    void add(int i, int j, const Cyc& v);
    Cyc get(int i, int j) const;  // zero if absent
    size_t nnz() const;

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    bool operator==(const CMatrix& o) const;
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    CMatrix transpose() const;
    CMatrix conjugate() const;
    CMatrix adjoint() const;
    CMatrix scaled(const Cyc& c) const;

    // Kronecker product; index (i,j) -> i*o.cols + j
    CMatrix kron(const CMatrix& o) const;

    // submatrix over the first tensor leg: out[x][y] = (*this)[(x,r2)][(y,c2)]
    // where rows = n * rows2
    CMatrix slice_second_leg(int n, int rows2_total, int r2, int c2) const;

    const std::map<int, std::map<int, Cyc>>& data() const { return rows_map_; }

  private:
    const CycloField* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::map<int, std::map<int, Cyc>> rows_map_;
};

}  // namespace qext
