#include "qext/zmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace qext {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const mpz_class& a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const mpz_class& b = B.at(k, j);
                if (b != 0) mpz_addmul(C.at(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    return C;
}

IntMatrix transpose(const IntMatrix& A) {
    IntMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

bool is_zero(const IntMatrix& A) {
    for (const auto& x : A.e)
        if (x != 0) return false;
    return true;
}

mpz_class det_bareiss(IntMatrix M) {
    if (M.rows != M.cols) throw std::invalid_argument("det: matrix not square");
    const int n = M.rows;
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                M.at(i, j) = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), M.at(i, j).get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

namespace {

// v_i -= q * v_k over a row range
inline void row_submul(IntMatrix& M, int i, int k, const mpz_class& q, int from) {
    if (q == 0) return;
    for (int j = from; j < M.cols; ++j)
        mpz_submul(M.at(i, j).get_mpz_t(), q.get_mpz_t(), M.at(k, j).get_mpz_t());
}

inline void col_submul(IntMatrix& M, int j, int k, const mpz_class& q, int from) {
    if (q == 0) return;
    for (int i = from; i < M.rows; ++i)
        mpz_submul(M.at(i, j).get_mpz_t(), q.get_mpz_t(), M.at(i, k).get_mpz_t());
}

struct Transforms {
    bool on = false;
    IntMatrix L, Linv, R, Rinv;

    void row_swap(int i, int k) {
        if (!on) return;
        for (int j = 0; j < L.cols; ++j) std::swap(L.at(i, j), L.at(k, j));
        for (int r = 0; r < Linv.rows; ++r) std::swap(Linv.at(r, i), Linv.at(r, k));
    }
    void row_negate(int i) {
        if (!on) return;
        for (int j = 0; j < L.cols; ++j) L.at(i, j) = -L.at(i, j);
        for (int r = 0; r < Linv.rows; ++r) Linv.at(r, i) = -Linv.at(r, i);
    }
    // rows (t,i) of M replaced by the unimodular combination
    //   row_t' = x*row_t + y*row_i ; row_i' = -(b/g)*row_t + (a/g)*row_i
    void row_combine(int t, int i, const mpz_class& x, const mpz_class& y,
                     const mpz_class& ag, const mpz_class& bg) {
        if (!on) return;
        for (int j = 0; j < L.cols; ++j) {
            mpz_class lt = L.at(t, j), li = L.at(i, j);
            L.at(t, j) = x * lt + y * li;
            L.at(i, j) = ag * li - bg * lt;
        }
        // inverse is [[ag, -y], [bg, x]] applied to columns (t,i)
        for (int r = 0; r < Linv.rows; ++r) {
            mpz_class ct = Linv.at(r, t), ci = Linv.at(r, i);
            Linv.at(r, t) = ag * ct + bg * ci;
            Linv.at(r, i) = x * ci - y * ct;
        }
    }
    // row_i -= q*row_k on M
    void row_axpy(int i, int k, const mpz_class& q) {
        if (!on || q == 0) return;
        for (int j = 0; j < L.cols; ++j)
            mpz_submul(L.at(i, j).get_mpz_t(), q.get_mpz_t(), L.at(k, j).get_mpz_t());
        for (int r = 0; r < Linv.rows; ++r)
            mpz_addmul(Linv.at(r, k).get_mpz_t(), q.get_mpz_t(),
                       Linv.at(r, i).get_mpz_t());
    }

    void col_swap(int j, int k) {
        if (!on) return;
        for (int i = 0; i < R.rows; ++i) std::swap(R.at(i, j), R.at(i, k));
        for (int c = 0; c < Rinv.cols; ++c) std::swap(Rinv.at(j, c), Rinv.at(k, c));
    }
    void col_negate(int j) {
        if (!on) return;
        for (int i = 0; i < R.rows; ++i) R.at(i, j) = -R.at(i, j);
        for (int c = 0; c < Rinv.cols; ++c) Rinv.at(j, c) = -Rinv.at(j, c);
    }
    void col_combine(int t, int j, const mpz_class& x, const mpz_class& y,
                     const mpz_class& ag, const mpz_class& bg) {
        if (!on) return;
        for (int i = 0; i < R.rows; ++i) {
            mpz_class ct = R.at(i, t), cj = R.at(i, j);
            R.at(i, t) = x * ct + y * cj;
            R.at(i, j) = ag * cj - bg * ct;
        }
        for (int c = 0; c < Rinv.cols; ++c) {
            mpz_class rt = Rinv.at(t, c), rj = Rinv.at(j, c);
            Rinv.at(t, c) = ag * rt + bg * rj;
            Rinv.at(j, c) = x * rj - y * rt;
        }
    }
    void col_axpy(int j, int k, const mpz_class& q) {
        if (!on || q == 0) return;
        for (int i = 0; i < R.rows; ++i)
            mpz_submul(R.at(i, j).get_mpz_t(), q.get_mpz_t(), R.at(i, k).get_mpz_t());
        for (int c = 0; c < Rinv.cols; ++c)
            mpz_addmul(Rinv.at(k, c).get_mpz_t(), q.get_mpz_t(),
                       Rinv.at(j, c).get_mpz_t());
    }
};

}  // namespace

SnfResult smith_normal_form(IntMatrix M, bool with_transforms) {
    const int r = M.rows, c = M.cols;
    SnfResult out;
    Transforms tf;
    tf.on = with_transforms;
    if (with_transforms) {
        tf.L = IntMatrix::identity(r);
        tf.Linv = IntMatrix::identity(r);
        tf.R = IntMatrix::identity(c);
        tf.Rinv = IntMatrix::identity(c);
    }

    const int steps = std::min(r, c);
    int t = 0;
    for (; t < steps; ++t) {
        // locate a smallest-magnitude nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                const mpz_class& v = M.at(i, j);
                if (v == 0) continue;
                if (pi < 0 || mpz_cmpabs(v.get_mpz_t(), M.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            for (int j = 0; j < c; ++j) std::swap(M.at(t, j), M.at(pi, j));
            tf.row_swap(t, pi);
        }
        if (pj != t) {
            for (int i = 0; i < r; ++i) std::swap(M.at(i, t), M.at(i, pj));
            tf.col_swap(t, pj);
        }

        for (;;) {
            // clear column t below the pivot
            for (int i = t + 1; i < r; ++i) {
                if (M.at(i, t) == 0) continue;
                mpz_class a = M.at(t, t), b = M.at(i, t), g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                if (b % a == 0) {
                    mpz_class q = b / a;
                    row_submul(M, i, t, q, t);
                    tf.row_axpy(i, t, q);
                } else {
                    mpz_class ag = a / g, bg = b / g;
                    for (int j = t; j < c; ++j) {
                        mpz_class mt = M.at(t, j), mi = M.at(i, j);
                        M.at(t, j) = x * mt + y * mi;
                        M.at(i, j) = ag * mi - bg * mt;
                    }
                    tf.row_combine(t, i, x, y, ag, bg);
                }
            }
            // clear row t right of the pivot
            bool col_dirty = false;
            for (int j = t + 1; j < c; ++j) {
                if (M.at(t, j) == 0) continue;
                mpz_class a = M.at(t, t), b = M.at(t, j), g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                if (b % a == 0) {
                    mpz_class q = b / a;
                    col_submul(M, j, t, q, t);
                    tf.col_axpy(j, t, q);
                } else {
                    mpz_class ag = a / g, bg = b / g;
                    for (int i = t; i < r; ++i) {
                        mpz_class mt = M.at(i, t), mj = M.at(i, j);
                        M.at(i, t) = x * mt + y * mj;
                        M.at(i, j) = ag * mj - bg * mt;
                    }
                    tf.col_combine(t, j, x, y, ag, bg);
                    col_dirty = true;  // column t may have been refilled
                }
            }
            if (col_dirty) continue;
            bool clear = true;
            for (int i = t + 1; i < r && clear; ++i) clear = (M.at(i, t) == 0);
            if (clear) break;
        }

        if (M.at(t, t) < 0) {
            for (int j = t; j < c; ++j) M.at(t, j) = -M.at(t, j);
            tf.row_negate(t);
        }

        // divisibility: absorb any entry the pivot does not divide
        bool redo = false;
        for (int i = t + 1; i < r && !redo; ++i)
            for (int j = t + 1; j < c && !redo; ++j)
                if (M.at(i, j) % M.at(t, t) != 0) {
                    for (int jj = t; jj < c; ++jj) M.at(t, jj) += M.at(i, jj);
                    tf.row_axpy(t, i, mpz_class(-1));
                    redo = true;
                }
        if (redo) --t;  // rerun the elimination at this pivot
    }

    out.S = std::move(M);
    out.rank = 0;
    for (int k = 0; k < steps; ++k)
        if (out.S.at(k, k) != 0) {
            out.divisors.push_back(out.S.at(k, k));
            ++out.rank;
        }
    if (with_transforms) {
        out.L = std::move(tf.L);
        out.Linv = std::move(tf.Linv);
        out.R = std::move(tf.R);
        out.Rinv = std::move(tf.Rinv);
    }
    return out;
}

RowHnf::RowHnf(int n, std::optional<mpz_class> modulus)
    : n_(n), mod_(std::move(modulus)), rows_(n) {
    if (mod_ && *mod_ <= 0) throw std::invalid_argument("RowHnf: bad modulus");
}

void RowHnf::insert(std::vector<mpz_class> v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("RowHnf: bad row");
    if (mod_)
        for (auto& x : v) {
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod_->get_mpz_t());
        }
    for (int j = 0; j < n_; ++j) {
        if (v[j] == 0) continue;
        if (rows_[j].empty()) {
            if (v[j] < 0)
                for (auto& x : v) x = -x;
            rows_[j] = std::move(v);
            return;
        }
        mpz_class& p = rows_[j][j];
        if (v[j] % p == 0) {
            mpz_class q = v[j] / p;
            for (int k = j; k < n_; ++k) {
                mpz_submul(v[k].get_mpz_t(), q.get_mpz_t(), rows_[j][k].get_mpz_t());
                if (mod_) mpz_fdiv_r(v[k].get_mpz_t(), v[k].get_mpz_t(), mod_->get_mpz_t());
            }
        } else {
            mpz_class a = p, b = v[j], g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                       b.get_mpz_t());
            mpz_class ag = a / g, bg = b / g;
            for (int k = j; k < n_; ++k) {
                mpz_class rk = rows_[j][k], vk = v[k];
                rows_[j][k] = x * rk + y * vk;
                v[k] = ag * vk - bg * rk;
                if (mod_) {
                    mpz_fdiv_r(rows_[j][k].get_mpz_t(), rows_[j][k].get_mpz_t(),
                               mod_->get_mpz_t());
                    mpz_fdiv_r(v[k].get_mpz_t(), v[k].get_mpz_t(), mod_->get_mpz_t());
                }
            }
        }
    }
}

void RowHnf::insert_row(const IntMatrix& A, int i) {
    std::vector<mpz_class> v(A.cols);
    for (int j = 0; j < A.cols; ++j) v[j] = A.at(i, j);
    insert(std::move(v));
}

int RowHnf::rank() const {
    int r = 0;
    for (const auto& row : rows_)
        if (!row.empty()) ++r;
    return r;
}

void RowHnf::size_reduce() {
    for (int j = n_ - 1; j >= 0; --j) {
        if (rows_[j].empty()) continue;
        for (int i = 0; i < j; ++i) {
            if (rows_[i].empty() || rows_[i][j] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows_[i][j].get_mpz_t(), rows_[j][j].get_mpz_t());
            if (q == 0) continue;
            for (int k = j; k < n_; ++k)
                mpz_submul(rows_[i][k].get_mpz_t(), q.get_mpz_t(),
                           rows_[j][k].get_mpz_t());
        }
    }
}

IntMatrix RowHnf::basis() {
    size_reduce();
    // with a modulus the represented lattice includes mod * Z^n, so those
    // generators are appended explicitly
    int extra = mod_ ? n_ : 0;
    IntMatrix B(rank() + extra, n_);
    int r = 0;
    for (int j = 0; j < n_; ++j) {
        if (rows_[j].empty()) continue;
        for (int k = 0; k < n_; ++k) B.at(r, k) = rows_[j][k];
        ++r;
    }
    if (mod_)
        for (int j = 0; j < n_; ++j, ++r) B.at(r, j) = *mod_;
    return B;
}

IntMatrix ModKernelLattice::basis() const {
    IntMatrix B = R;
    for (int j = 0; j < B.cols; ++j)
        for (int i = 0; i < B.rows; ++i) B.at(i, j) *= c[j];
    return B;
}

ModKernelLattice kernel_mod(const IntMatrix& A, const mpz_class& d) {
    if (d <= 0) throw std::invalid_argument("kernel_mod: d must be positive");
    const int n = A.cols;
    RowHnf acc(n, d);
    for (int i = 0; i < A.rows; ++i) acc.insert_row(A, i);
    IntMatrix W = acc.basis();  // includes the d*Z^n generators, full column rank
    SnfResult snf = smith_normal_form(std::move(W), true);

    // x in kernel  <=>  S * (Rinv x) == 0 mod d  <=>  coords are multiples of
    // d / gcd(s_j, d)
    ModKernelLattice out;
    out.R = std::move(snf.R);
    out.Rinv = std::move(snf.Rinv);
    out.c.resize(n);
    for (int j = 0; j < n; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), snf.S.at(j, j).get_mpz_t(), d.get_mpz_t());
        out.c[j] = d / g;
    }
    return out;
}

LatticeQuotient lattice_quotient(const ModKernelLattice& outer,
                                 const ModKernelLattice& inner) {
    const int n = outer.R.rows;
    // W = outer^-1 * inner = diag(1/c_out) * Rinv_out * R_in * diag(c_in)
    IntMatrix W = mul(outer.Rinv, inner.R);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            W.at(i, j) *= inner.c[j];
            if (W.at(i, j) % outer.c[i] != 0)
                throw std::logic_error("lattice_quotient: inner not contained in outer");
            mpz_divexact(W.at(i, j).get_mpz_t(), W.at(i, j).get_mpz_t(),
                         outer.c[i].get_mpz_t());
        }
    SnfResult snf = smith_normal_form(std::move(W), true);
    if (snf.rank != n) throw std::logic_error("lattice_quotient: inner not full rank");

    // quotient generators are the columns of outer_basis * Linv
    IntMatrix G = mul(outer.basis(), snf.Linv);
    LatticeQuotient q;
    for (int j = 0; j < n; ++j) {
        if (snf.S.at(j, j) == 1) continue;
        std::vector<mpz_class> gen(n);
        for (int i = 0; i < n; ++i) gen[i] = G.at(i, j);
        q.generators.push_back(std::move(gen));
        q.orders.push_back(snf.S.at(j, j));
    }
    return q;
}

}  // namespace qext
