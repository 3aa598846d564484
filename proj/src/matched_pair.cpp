#include "qext/matched_pair.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qext {

namespace {

// Abstract copy of a subgroup: element 0 of the copy is the identity of G.
// Returns the copy and the inclusion list (copy index -> ambient index).
std::pair<FiniteGroup, std::vector<Elem>> subgroup_copy(const FiniteGroup& G,
                                                        std::vector<Elem> elems,
                                                        const std::string& name) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems.front() != 0)
        throw std::invalid_argument(name + ": subgroup must contain the identity");
    if (!G.is_subgroup(elems))
        throw std::invalid_argument(name + ": element set is not a subgroup");

    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(G.order(), -1);
    for (int k = 0; k < m; ++k) pos[elems[k]] = k;
    std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        labels[a] = G.label(elems[a]);
        for (int b = 0; b < m; ++b) table[a][b] = pos[G.mul(elems[a], elems[b])];
    }
    return {FiniteGroup(name, std::move(table), std::move(labels)), std::move(elems)};
}

}  // namespace

MatchedPair exact_factorization(const FiniteGroup& G, const std::vector<Elem>& h1,
                                const std::vector<Elem>& h2, const std::string& name) {
    MatchedPair mp;
    const std::string nm = name.empty() ? G.name() : name;
    auto [G1, inc1] = subgroup_copy(G, h1, nm + ".G1");
    auto [G2, inc2] = subgroup_copy(G, h2, nm + ".G2");

    std::set<Elem> s1(inc1.begin(), inc1.end()), s2(inc2.begin(), inc2.end());
    std::vector<Elem> common;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::back_inserter(common));
    if (common.size() != 1)
        throw std::invalid_argument(nm + ": subgroups intersect beyond the identity");
    if (static_cast<long>(G1.order()) * G2.order() != G.order())
        throw std::invalid_argument(nm + ": |H1|*|H2| != |G|");

    mp.G = G;
    mp.G1 = std::move(G1);
    mp.G2 = std::move(G2);
    mp.i = std::move(inc1);
    mp.j.resize(mp.G2.order());
    for (int s = 0; s < mp.G2.order(); ++s) mp.j[s] = G.inv(inc2[s]);

    const int n1 = mp.n1(), n2 = mp.n2();

    // theta(g,s) = i(g) j(s) must cover G exactly once
    std::vector<int> seen(G.order(), 0);
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s) seen[G.mul(mp.i[g], mp.j[s])]++;
    for (int x = 0; x < G.order(); ++x)
        if (seen[x] != 1)
            throw std::invalid_argument(nm + ": factorization not exact (theta misses " +
                                        G.label(x) + ")");

    // invert rho(g,s) = j(s) i(g), then read the actions off
    //   j(alpha_g(s)) i(beta_s(g)) = i(g) j(s)
    std::vector<std::pair<Elem, Elem>> rho_inv(G.order(), {-1, -1});
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s) {
            Elem x = G.mul(mp.j[s], mp.i[g]);
            if (rho_inv[x].first >= 0)
                throw std::invalid_argument(nm + ": rho is not injective");
            rho_inv[x] = {g, s};
        }

    mp.alpha.assign(n1, std::vector<Elem>(n2));
    mp.beta.assign(n2, std::vector<Elem>(n1));
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s) {
            auto [bg, as] = rho_inv[G.mul(mp.i[g], mp.j[s])];
            mp.alpha[g][s] = as;
            mp.beta[s][g] = bg;
        }
    return mp;
}

std::vector<IdentityViolation> verify_matched_identities(const MatchedPair& mp) {
    std::vector<IdentityViolation> out;
    const int n1 = mp.n1(), n2 = mp.n2();
    const FiniteGroup &G1 = mp.G1, &G2 = mp.G2;
    auto fail = [&](const char* id, std::vector<Elem> args) {
        out.push_back({id, std::move(args)});
    };

    for (int g = 0; g < n1; ++g) {
        if (mp.alpha[g][0] != 0) fail("alpha_g(e)=e", {g});
        if (mp.beta[0][g] != g) fail("beta_e(g)=g", {g});
    }
    for (int s = 0; s < n2; ++s) {
        if (mp.alpha[0][s] != s) fail("alpha_e(s)=s", {s});
        if (mp.beta[s][0] != 0) fail("beta_s(e)=e", {s});
    }

    // defining relation against the ambient group
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            if (mp.G.mul(mp.j[mp.alpha[g][s]], mp.i[mp.beta[s][g]]) !=
                mp.G.mul(mp.i[g], mp.j[s]))
                fail("j(alpha)i(beta)=i(g)j(s)", {g, s});

    for (int h = 0; h < n1; ++h)
        for (int g = 0; g < n1; ++g)
            for (int s = 0; s < n2; ++s) {
                if (mp.alpha[G1.mul(h, g)][s] != mp.alpha[h][mp.alpha[g][s]])
                    fail("alpha_{hg}(s)=alpha_h(alpha_g(s))", {h, g, s});
                if (mp.beta[s][G1.mul(h, g)] !=
                    G1.mul(mp.beta[mp.alpha[g][s]][h], mp.beta[s][g]))
                    fail("beta_s(hg)=beta_{alpha_g(s)}(h)beta_s(g)", {h, g, s});
            }
    for (int t = 0; t < n2; ++t)
        for (int s = 0; s < n2; ++s)
            for (int g = 0; g < n1; ++g) {
                if (mp.beta[G2.mul(t, s)][g] != mp.beta[t][mp.beta[s][g]])
                    fail("beta_{ts}(g)=beta_t(beta_s(g))", {t, s, g});
                if (mp.alpha[g][G2.mul(t, s)] !=
                    G2.mul(mp.alpha[mp.beta[s][g]][t], mp.alpha[g][s]))
                    fail("alpha_g(ts)=alpha_{beta_s(g)}(t)alpha_g(s)", {t, s, g});
            }
    return out;
}

MatchedPair trivial_matched_pair(const FiniteGroup& G1, const FiniteGroup& G2) {
    FiniteGroup G = direct_product(G1, G2);
    const int n2 = G2.order();
    std::vector<Elem> h1, h2;
    for (int g = 0; g < G1.order(); ++g) h1.push_back(g * n2);
    for (int s = 0; s < n2; ++s) h2.push_back(s);
    return exact_factorization(G, h1, h2, G1.name() + "|" + G2.name());
}

}  // namespace qext
