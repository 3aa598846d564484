#include "qext/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace qext {

namespace {

using Poly = std::vector<mpq_class>;  // coefficient list, low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, remainder must vanish
Poly poly_div(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::logic_error("poly_div: nonzero remainder");
    return q;
}

Poly cyclotomic_poly(long n) {
    // x^n - 1 divided by the proper cyclotomic factors
    Poly p(n + 1, mpq_class(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div(std::move(p), cyclotomic_poly(d));
    return p;
}

}  // namespace

CycloField::CycloField(long L) : L_(L) {
    if (L <= 0) throw std::invalid_argument("CycloField: order must be positive");
    Poly phi = cyclotomic_poly(L);
    deg_ = static_cast<int>(phi.size()) - 1;

    long count = std::max<long>(L_, 2 * deg_ - 1);
    pow_.resize(std::max<long>(count, 1));
    std::vector<mpq_class> cur(deg_, mpq_class(0));
    if (deg_ == 0) throw std::logic_error("CycloField: degenerate field");
    cur[0] = 1;
    for (long k = 0; k < count; ++k) {
        pow_[k] = cur;
        // multiply by x and reduce by phi
        mpq_class top = cur[deg_ - 1];
        for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) cur[i] -= top * phi[i];
    }
}

const std::vector<mpq_class>& CycloField::zeta_pow(long k) const {
    k %= L_;
    if (k < 0) k += L_;
    return pow_[k];
}

Cyc Cyc::one(const CycloField& f) {
    Cyc c(f);
    c.a[0] = 1;
    return c;
}

Cyc Cyc::from_rational(const CycloField& f, const mpq_class& q) {
    Cyc c(f);
    c.a[0] = q;
    return c;
}

Cyc Cyc::from_phase(const CycloField& f, const Phase& p) {
    if (f.order() % p.den != 0)
        throw std::invalid_argument("Cyc::from_phase: denominator not in field");
    Cyc c(f);
    c.a = f.zeta_pow(p.num * (f.order() / p.den));
    return c;
}

bool Cyc::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    const int d = F->degree();
    std::vector<mpq_class> conv(2 * d - 1, mpq_class(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (o.a[j] != 0) conv[i + j] += a[i] * o.a[j];
    }
    Cyc r(*F);
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        if (k < d) {
            r.a[k] += conv[k];
        } else {
            const auto& red = F->zeta_pow(k % F->order());
            // k < 2d-1 <= values covered by the power table; when k >= L the
            // modular lookup is exact since zeta^L = 1
            for (int i = 0; i < d; ++i) r.a[i] += conv[k] * red[i];
        }
    }
    return r;
}

bool Cyc::operator==(const Cyc& o) const { return a == o.a; }

Cyc Cyc::conj() const {
    const int d = F->degree();
    Cyc r(*F);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        const auto& z = F->zeta_pow(-static_cast<long>(i));
        for (int k = 0; k < d; ++k) r.a[k] += a[i] * z[k];
    }
    return r;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: zero element");
    const int d = F->degree();
    // solve (multiplication-by-a) y = 1 by Gaussian elimination over Q
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
    for (int j = 0; j < d; ++j) {
        Cyc basis(*F);
        basis.a[j] = 1;
        Cyc col = *this * basis;
        for (int i = 0; i < d; ++i) M[i][j] = col.a[i];
    }
    M[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int p = -1;
        for (int i = c; i < d; ++i)
            if (M[i][c] != 0) { p = i; break; }
        if (p < 0) throw std::logic_error("Cyc::inverse: singular");
        std::swap(M[c], M[p]);
        mpq_class pivot = M[c][c];
        for (auto& x : M[c]) x /= pivot;
        for (int i = 0; i < d; ++i) {
            if (i == c || M[i][c] == 0) continue;
            mpq_class f = M[i][c];
            for (int j = c; j <= d; ++j) M[i][j] -= f * M[c][j];
        }
    }
    Cyc r(*F);
    for (int i = 0; i < d; ++i) r.a[i] = M[i][d];
    return r;
}

std::pair<double, double> Cyc::approx() const {
    double re = 0, im = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double c = a[i].get_d();
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(F->order());
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {re, im};
}

CMatrix CMatrix::identity(const CycloField& f, int n) {
    CMatrix I(f, n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, Cyc::one(f));
    return I;
}

void CMatrix::set(int i, int j, Cyc v) {
    if (v.is_zero())
        rows_map_[i].erase(j);
    else
        rows_map_[i][j] = std::move(v);
    if (rows_map_.count(i) && rows_map_[i].empty()) rows_map_.erase(i);
}

void CMatrix::add(int i, int j, const Cyc& v) {
    if (v.is_zero()) return;
    auto it = rows_map_[i].find(j);
    if (it == rows_map_[i].end()) {
        rows_map_[i][j] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) rows_map_[i].erase(it);
    }
    if (rows_map_[i].empty()) rows_map_.erase(i);
}

Cyc CMatrix::get(int i, int j) const {
    auto r = rows_map_.find(i);
    if (r == rows_map_.end()) return Cyc::zero(*F_);
    auto c = r->second.find(j);
    return c == r->second.end() ? Cyc::zero(*F_) : c->second;
}

size_t CMatrix::nnz() const {
    size_t n = 0;
    for (const auto& [i, row] : rows_map_) n += row.size();
    return n;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    CMatrix r = *this;
    for (const auto& [i, row] : o.rows_map_)
        for (const auto& [j, v] : row) r.add(i, j, v);
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    CMatrix r = *this;
    for (const auto& [i, row] : o.rows_map_)
        for (const auto& [j, v] : row) r.add(i, j, -v);
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix r(*F_, rows_, o.cols_);
    for (const auto& [i, row] : rows_map_)
        for (const auto& [k, v] : row) {
            auto it = o.rows_map_.find(k);
            if (it == o.rows_map_.end()) continue;
            for (const auto& [j, w] : it->second) r.add(i, j, v * w);
        }
    return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return rows_map_ == o.rows_map_;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(*F_, cols_, rows_);
    for (const auto& [i, row] : rows_map_)
        for (const auto& [j, v] : row) r.set(j, i, v);
    return r;
}

CMatrix CMatrix::conjugate() const {
    CMatrix r(*F_, rows_, cols_);
    for (const auto& [i, row] : rows_map_)
        for (const auto& [j, v] : row) r.set(i, j, v.conj());
    return r;
}

CMatrix CMatrix::adjoint() const { return conjugate().transpose(); }

CMatrix CMatrix::scaled(const Cyc& c) const {
    CMatrix r(*F_, rows_, cols_);
    for (const auto& [i, row] : rows_map_)
        for (const auto& [j, v] : row) r.set(i, j, v * c);
    return r;
}

CMatrix CMatrix::kron(const CMatrix& o) const {
    CMatrix r(*F_, rows_ * o.rows_, cols_ * o.cols_);
    for (const auto& [i, row] : rows_map_)
        for (const auto& [j, v] : row)
            for (const auto& [k, orow] : o.rows_map_)
                for (const auto& [l, w] : orow)
                    r.set(i * o.rows_ + k, j * o.cols_ + l, v * w);
    return r;
}

CMatrix CMatrix::slice_second_leg(int n, int rows2_total, int r2, int c2) const {
    CMatrix r(*F_, n, n);
    for (const auto& [i, row] : rows_map_) {
        if (i % rows2_total != r2) continue;
        int x = i / rows2_total;
        for (const auto& [j, v] : row)
            if (j % rows2_total == c2) r.add(x, j / rows2_total, v);
    }
    return r;
}

}  // namespace qext
