#include "qext/phase_perm.hpp"

#include <stdexcept>

namespace qext {

PhasePermOperator::PhasePermOperator(int n) : dim(n), perm(n), phase(n) {
    for (int i = 0; i < n; ++i) perm[i] = i;
}

PhasePermOperator PhasePermOperator::identity(int n) { return PhasePermOperator(n); }

PhasePermOperator PhasePermOperator::flip(int n) {
    PhasePermOperator f(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.perm[i * n + j] = j * n + i;
    return f;
}

PhasePermOperator PhasePermOperator::diagonal(std::vector<Phase> phases) {
    PhasePermOperator d(static_cast<int>(phases.size()));
    d.phase = std::move(phases);
    return d;
}

bool PhasePermOperator::is_identity() const {
    for (int i = 0; i < dim; ++i)
        if (perm[i] != i || !phase[i].is_zero()) return false;
    return true;
}

PhasePermOperator PhasePermOperator::operator*(const PhasePermOperator& o) const {
    if (dim != o.dim) throw std::invalid_argument("PhasePermOperator: dim mismatch");
    PhasePermOperator r(dim);
    for (int i = 0; i < dim; ++i) {
        r.perm[i] = perm[o.perm[i]];
        r.phase[i] = o.phase[i] + phase[o.perm[i]];
    }
    return r;
}

PhasePermOperator PhasePermOperator::adjoint() const {
    PhasePermOperator r(dim);
    for (int i = 0; i < dim; ++i) {
        r.perm[perm[i]] = i;
        r.phase[perm[i]] = -phase[i];
    }
    return r;
}

PhasePermOperator PhasePermOperator::conj_phases() const {
    PhasePermOperator r = *this;
    for (auto& p : r.phase) p = -p;
    return r;
}

CMatrix PhasePermOperator::matrix(const CycloField& f) const {
    CMatrix m(f, dim, dim);
    for (int i = 0; i < dim; ++i) m.set(perm[i], i, Cyc::from_phase(f, phase[i]));
    return m;
}

PhasePermOperator tensor(const PhasePermOperator& a, const PhasePermOperator& b) {
    PhasePermOperator r(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            r.perm[i * b.dim + j] = a.perm[i] * b.dim + b.perm[j];
            r.phase[i * b.dim + j] = a.phase[i] + b.phase[j];
        }
    return r;
}

PhasePermOperator leg12(const PhasePermOperator& w, int n) {
    return tensor(w, PhasePermOperator::identity(n));
}

PhasePermOperator leg23(const PhasePermOperator& w, int n) {
    return tensor(PhasePermOperator::identity(n), w);
}

PhasePermOperator leg13(const PhasePermOperator& w, int n) {
    if (w.dim != n * n) throw std::invalid_argument("leg13: dim mismatch");
    PhasePermOperator r(n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int pair = i * n + k;
                int ii = w.perm[pair] / n, kk = w.perm[pair] % n;
                int x = (i * n + j) * n + k;
                r.perm[x] = (ii * n + j) * n + kk;
                r.phase[x] = w.phase[pair];
            }
    return r;
}

PhasePermOperator from_kernel(int dim, const std::vector<int>& sigma,
                              const std::vector<Phase>& c) {
    PhasePermOperator r(dim);
    std::vector<int> inv(dim, -1);
    for (int x = 0; x < dim; ++x) {
        if (sigma[x] < 0 || sigma[x] >= dim || inv[sigma[x]] >= 0)
            throw std::invalid_argument("from_kernel: sigma is not a bijection");
        inv[sigma[x]] = x;
    }
    for (int y = 0; y < dim; ++y) {
        r.perm[y] = inv[y];
        r.phase[y] = c[inv[y]];
    }
    return r;
}

std::optional<int> first_difference(const PhasePermOperator& a,
                                    const PhasePermOperator& b) {
    if (a.dim != b.dim) return 0;
    for (int i = 0; i < a.dim; ++i)
        if (a.perm[i] != b.perm[i] || a.phase[i] != b.phase[i]) return i;
    return std::nullopt;
}

CMatrix Antiunitary::sandwich(const CMatrix& m) const {
    const CycloField& f = m.field();
    CMatrix l = linear.matrix(f);
    CMatrix lbar = linear.conj_phases().matrix(f);
    return l * m.conjugate() * lbar;
}

}  // namespace qext
