#include "qext/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace qext {

std::int64_t CocyclePair::denominator() const {
    std::int64_t d = 1;
    for (const auto& p : U) d = std::lcm(d, p.den);
    for (const auto& p : V) d = std::lcm(d, p.den);
    return d;
}

CocyclePair trivial_cocycle(const MatchedPair& pair) {
    return CocyclePair(pair.n1(), pair.n2());
}

CocycleSystem cocycle_system(const MatchedPair& mp) {
    CocycleSystem sys;
    const int n1 = mp.n1(), n2 = mp.n2();
    sys.n1 = n1;
    sys.n2 = n2;
    sys.N = n1 * n1 * n2 + n1 * n2 * n2;
    sys.K = n1 * n2;

    const FiniteGroup &G1 = mp.G1, &G2 = mp.G2;
    const int rows1 = n1 * n1 * n1 * n2;
    const int rows2 = n1 * n2 * n2 * n2;
    const int rows3 = n1 * n1 * n2 * n2;
    sys.A = IntMatrix(rows1 + rows2 + rows3, sys.N);

    int r = 0;
    //   U(g,h,alpha_k(s)) + U(gh,k,s) - U(h,k,s) - U(g,hk,s) = 0
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int k = 0; k < n1; ++k)
                for (int s = 0; s < n2; ++s, ++r) {
                    sys.A.at(r, sys.u_index(g, h, mp.alpha[k][s])) += 1;
                    sys.A.at(r, sys.u_index(G1.mul(g, h), k, s)) += 1;
                    sys.A.at(r, sys.u_index(h, k, s)) -= 1;
                    sys.A.at(r, sys.u_index(g, G1.mul(h, k), s)) -= 1;
                }
    //   V(beta_s(g),t,r) + V(g,s,rt) - V(g,s,t) - V(g,ts,r) = 0
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            for (int t = 0; t < n2; ++t)
                for (int rr = 0; rr < n2; ++rr, ++r) {
                    sys.A.at(r, sys.v_index(mp.beta[s][g], t, rr)) += 1;
                    sys.A.at(r, sys.v_index(g, s, G2.mul(rr, t))) += 1;
                    sys.A.at(r, sys.v_index(g, s, t)) -= 1;
                    sys.A.at(r, sys.v_index(g, G2.mul(t, s), rr)) -= 1;
                }
    //   V(gh,s,t) - U(g,h,ts) + U(g,h,s)
    //     + U(beta_{alpha_h(s)}(g), beta_s(h), t)
    //     - V(g, alpha_h(s), alpha_{beta_s(h)}(t)) - V(h,s,t) = 0
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int s = 0; s < n2; ++s)
                for (int t = 0; t < n2; ++t, ++r) {
                    sys.A.at(r, sys.v_index(G1.mul(g, h), s, t)) += 1;
                    sys.A.at(r, sys.u_index(g, h, G2.mul(t, s))) -= 1;
                    sys.A.at(r, sys.u_index(g, h, s)) += 1;
                    sys.A.at(r, sys.u_index(mp.beta[mp.alpha[h][s]][g],
                                            mp.beta[s][h], t)) += 1;
                    sys.A.at(r, sys.v_index(g, mp.alpha[h][s],
                                            mp.alpha[mp.beta[s][h]][t])) -= 1;
                    sys.A.at(r, sys.v_index(h, s, t)) -= 1;
                }

    //   dU(g,h,s) = R(h,s) + R(g,alpha_h(s)) - R(gh,s)
    //   dV(g,s,t) = R(g,s) + R(beta_s(g),t) - R(g,ts)
    sys.B = IntMatrix(sys.N, sys.K);
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int s = 0; s < n2; ++s) {
                int row = sys.u_index(g, h, s);
                sys.B.at(row, sys.r_index(h, s)) += 1;
                sys.B.at(row, sys.r_index(g, mp.alpha[h][s])) += 1;
                sys.B.at(row, sys.r_index(G1.mul(g, h), s)) -= 1;
            }
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            for (int t = 0; t < n2; ++t) {
                int row = sys.v_index(g, s, t);
                sys.B.at(row, sys.r_index(g, s)) += 1;
                sys.B.at(row, sys.r_index(mp.beta[s][g], t)) += 1;
                sys.B.at(row, sys.r_index(g, G2.mul(t, s))) -= 1;
            }
    return sys;
}

namespace {

// Basis of ker(B^T) as columns (N x r), plus the coordinate projection
// (r x N) mapping a kernel vector to its coordinates in that basis.
struct KernelData {
    IntMatrix basis;
    IntMatrix coords;
};

KernelData kernel_of_transpose(const IntMatrix& B) {
    SnfResult snf = smith_normal_form(transpose(B), true);
    const int N = B.rows, rank = snf.rank, r = N - rank;
    KernelData kd;
    kd.basis = IntMatrix(N, r);
    kd.coords = IntMatrix(r, N);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < N; ++i) {
            kd.basis.at(i, k) = snf.R.at(i, rank + k);
            kd.coords.at(k, i) = snf.Rinv.at(rank + k, i);
        }
    return kd;
}

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("invariant factor exceeds int64");
    return z.get_si();
}

std::vector<Phase> cocycle_as_vector(const CocycleSystem& sys, const CocyclePair& c) {
    std::vector<Phase> x(sys.N);
    for (size_t i = 0; i < c.U.size(); ++i) x[i] = c.U[i];
    for (size_t i = 0; i < c.V.size(); ++i) x[c.U.size() + i] = c.V[i];
    return x;
}

CocyclePair vector_as_cocycle(const CocycleSystem& sys, const std::vector<Phase>& x) {
    CocyclePair c(sys.n1, sys.n2);
    for (size_t i = 0; i < c.U.size(); ++i) c.U[i] = x[i];
    for (size_t i = 0; i < c.V.size(); ++i) c.V[i] = x[c.U.size() + i];
    return c;
}

}  // namespace

AbelianInvariants extension_group(const MatchedPair& pair) {
    CocycleSystem sys = cocycle_system(pair);

    KernelData ker = kernel_of_transpose(sys.B);
    const int r = ker.coords.rows;

    // Hermite basis of the row lattice of A (= im A^T)
    RowHnf hnf(sys.N);
    for (int i = 0; i < sys.A.rows; ++i) hnf.insert_row(sys.A, i);
    IntMatrix GA = hnf.basis();

    // coordinates of im(A^T) inside ker(B^T); rows of A lie in the kernel
    // because A*B = 0
    IntMatrix C = mul(ker.coords, transpose(GA));

    SnfResult snf = smith_normal_form(std::move(C), false);
    AbelianInvariants inv;
    inv.torus_rank = r - snf.rank;
    for (const auto& d : snf.divisors)
        if (d != 1) inv.invariant_factors.push_back(to_i64(d));
    return inv;
}

std::vector<CocycleViolation> is_cocycle(const MatchedPair& mp, const CocyclePair& c) {
    std::vector<CocycleViolation> out;
    const int n1 = mp.n1(), n2 = mp.n2();
    if (c.n1 != n1 || c.n2 != n2)
        throw std::invalid_argument("is_cocycle: cocycle shape mismatch");
    const FiniteGroup &G1 = mp.G1, &G2 = mp.G2;

    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int k = 0; k < n1; ++k)
                for (int s = 0; s < n2; ++s) {
                    Phase res = c.u(g, h, mp.alpha[k][s]) + c.u(G1.mul(g, h), k, s) -
                                c.u(h, k, s) - c.u(g, G1.mul(h, k), s);
                    if (!res.is_zero()) out.push_back({1, {g, h, k, s}, res});
                }
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            for (int t = 0; t < n2; ++t)
                for (int rr = 0; rr < n2; ++rr) {
                    Phase res = c.v(mp.beta[s][g], t, rr) + c.v(g, s, G2.mul(rr, t)) -
                                c.v(g, s, t) - c.v(g, G2.mul(t, s), rr);
                    if (!res.is_zero()) out.push_back({2, {g, s, t, rr}, res});
                }
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int s = 0; s < n2; ++s)
                for (int t = 0; t < n2; ++t) {
                    Phase res = c.v(G1.mul(g, h), s, t) - c.u(g, h, G2.mul(t, s)) +
                                c.u(g, h, s) +
                                c.u(mp.beta[mp.alpha[h][s]][g], mp.beta[s][h], t) -
                                c.v(g, mp.alpha[h][s], mp.alpha[mp.beta[s][h]][t]) -
                                c.v(h, s, t);
                    if (!res.is_zero()) out.push_back({3, {g, h, s, t}, res});
                }
    return out;
}

CocyclePair coboundary_shift(const MatchedPair& mp, const CocyclePair& c,
                             const std::vector<Phase>& R) {
    const int n1 = mp.n1(), n2 = mp.n2();
    if (static_cast<int>(R.size()) != n1 * n2)
        throw std::invalid_argument("coboundary_shift: R table has wrong size");
    auto r = [&](int g, int s) -> const Phase& { return R[g * n2 + s]; };

    CocyclePair out = c;
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int s = 0; s < n2; ++s)
                out.u(g, h, s) += r(h, s) + r(g, mp.alpha[h][s]) -
                                  r(mp.G1.mul(g, h), s);
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            for (int t = 0; t < n2; ++t)
                out.v(g, s, t) += r(g, s) + r(mp.beta[s][g], t) -
                                  r(g, mp.G2.mul(t, s));
    return out;
}

CohomologyWitness are_cohomologous(const MatchedPair& pair, const CocyclePair& c1,
                                   const CocyclePair& c2) {
    if (!is_cocycle(pair, c1).empty() || !is_cocycle(pair, c2).empty())
        throw std::invalid_argument("are_cohomologous: inputs must be cocycles");
    CocycleSystem sys = cocycle_system(pair);

    std::vector<Phase> x1 = cocycle_as_vector(sys, c1);
    std::vector<Phase> x2 = cocycle_as_vector(sys, c2);
    std::vector<Phase> x(sys.N);
    for (int i = 0; i < sys.N; ++i) x[i] = x1[i] - x2[i];

    // Solve B y = x over Q/Z via the Smith form of B. Rows of L beyond the
    // rank span ker(B^T); their pairing with x must vanish for solvability,
    // and divisibility of Q/Z supplies the remaining coordinates.
    SnfResult snf = smith_normal_form(sys.B, true);
    std::vector<Phase> xp(sys.N);
    for (int i = 0; i < sys.N; ++i) {
        Phase acc;
        for (int k = 0; k < sys.N; ++k) {
            const mpz_class& l = snf.L.at(i, k);
            if (l != 0) acc += x[k].times(to_i64(l));
        }
        xp[i] = acc;
    }

    CohomologyWitness w;
    for (int i = snf.rank; i < sys.N; ++i)
        if (!xp[i].is_zero()) {
            w.cohomologous = false;
            w.detail = "kernel pairing " + std::to_string(i - snf.rank) +
                       " is nonzero: " + xp[i].str();
            return w;
        }

    std::vector<Phase> wcoord(sys.K);
    for (int i = 0; i < snf.rank; ++i)
        wcoord[i] = Phase(xp[i].num, xp[i].den * to_i64(snf.divisors[i]));
    w.R.assign(sys.K, Phase());
    for (int i = 0; i < sys.K; ++i) {
        Phase acc;
        for (int k = 0; k < sys.K; ++k) {
            const mpz_class& rr = snf.R.at(i, k);
            if (rr != 0 && !wcoord[k].is_zero()) acc += wcoord[k].times(to_i64(rr));
        }
        w.R[i] = acc;
    }
    w.cohomologous = true;
    return w;
}

CocyclePair normalize_cocycle(const MatchedPair& pair, const CocyclePair& c) {
    if (!is_cocycle(pair, c).empty())
        throw std::invalid_argument("normalize_cocycle: input is not a cocycle");
    const int n1 = pair.n1(), n2 = pair.n2();

    // kill U(e,e,s); the unit laws in U and V(e,s,t) then follow from the
    // cocycle equations
    std::vector<Phase> r1(n1 * n2);
    for (int s = 0; s < n2; ++s) r1[s] = -c.u(0, 0, s);
    CocyclePair mid = coboundary_shift(pair, c, r1);

    // kill V(g,e,e) as well; this collapses the remaining unit slots
    // V(g,e,t), V(g,s,e) and U(g,h,e) used by the operator tables
    std::vector<Phase> r2(n1 * n2);
    for (int g = 0; g < n1; ++g) r2[g * n2] = -mid.v(g, 0, 0);
    CocyclePair out = coboundary_shift(pair, mid, r2);

    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            if (!out.u(g, 0, s).is_zero() || !out.u(0, g, s).is_zero() ||
                !out.v(g, 0, s).is_zero() || !out.v(g, s, 0).is_zero())
                throw std::logic_error("normalize_cocycle: unit law failed");
    for (int s = 0; s < n2; ++s)
        for (int t = 0; t < n2; ++t)
            if (!out.v(0, s, t).is_zero())
                throw std::logic_error("normalize_cocycle: V(e,s,t) != 0");
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            if (!out.u(g, h, 0).is_zero())
                throw std::logic_error("normalize_cocycle: U(g,h,e) != 0");
    return out;
}

RepresentativeSet cocycle_representatives(const MatchedPair& pair, std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("cocycle_representatives: d must be positive");
    CocycleSystem sys = cocycle_system(pair);

    RepresentativeSet out;
    out.gamma = extension_group(pair);
    out.complete = (out.gamma.torus_rank == 0) && (d % out.gamma.torsion_exponent() == 0);

    // solutions of A x == 0 (mod d)
    ModKernelLattice solutions = kernel_mod(sys.A, d);
    // coboundaries over R/Z with denominator dividing d: x such that
    // z . x == 0 (mod d) for z running over a basis of ker(B^T)
    KernelData ker = kernel_of_transpose(sys.B);
    ModKernelLattice coboundaries = kernel_mod(transpose(ker.basis), d);

    LatticeQuotient quot = lattice_quotient(solutions, coboundaries);

    std::int64_t classes = 1;
    for (const auto& o : quot.orders) {
        classes *= to_i64(o);
        if (classes > 100000)
            throw std::runtime_error("cocycle_representatives: class count too large");
    }

    std::vector<std::int64_t> idx(quot.orders.size(), 0);
    for (std::int64_t k = 0; k < classes; ++k) {
        std::vector<Phase> x(sys.N);
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] == 0) continue;
            mpz_class dd(static_cast<long>(d));
            for (int i = 0; i < sys.N; ++i) {
                mpz_class num = quot.generators[j][i] * idx[j];
                mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), dd.get_mpz_t());
                if (num != 0) x[i] += Phase(to_i64(num), d);
            }
        }
        out.reps.push_back(vector_as_cocycle(sys, x));
        for (size_t j = 0; j < idx.size(); ++j) {
            if (++idx[j] < to_i64(quot.orders[j])) break;
            idx[j] = 0;
        }
    }
    return out;
}

}  // namespace qext
