#include "qext/fixtures.hpp"

#include <stdexcept>

namespace qext::fixtures {

FiniteGroup zm_swap_product(int m) {
    FiniteGroup n2 = direct_product(cyclic_group(m), cyclic_group(m));
    FiniteGroup z2 = cyclic_group(2);
    std::vector<std::vector<Elem>> action(2);
    action[0].resize(n2.order());
    action[1].resize(n2.order());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            action[0][a * m + b] = a * m + b;
            action[1][a * m + b] = b * m + a;
        }
    return semidirect_product(n2, z2, action);
}

FiniteGroup dihedral8_by_inversion() {
    FiniteGroup z4 = cyclic_group(4);
    FiniteGroup z2 = cyclic_group(2);
    std::vector<std::vector<Elem>> action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    return semidirect_product(z4, z2, action);
}

FiniteGroup symmetric4() {
    return group_from_generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
}

MatchedPair zm_swap_pair(int m) {
    FiniteGroup g = zm_swap_product(m);
    // element (n, eps) has index n*2 + eps
    std::vector<Elem> h1 = {0, 1};
    std::vector<Elem> h2;
    for (int n = 0; n < m * m; ++n) h2.push_back(n * 2);
    return exact_factorization(g, h1, h2, "Z" + std::to_string(m) + "^2-swap");
}

MatchedPair kac_paljutkin_pair() { return zm_swap_pair(2); }

MatchedPair s4_pair() {
    std::vector<Perm> elems;
    FiniteGroup s4 = group_from_generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}},
                                           FiniteGroup::kDefaultMaxOrder, &elems);
    std::vector<Elem> h1, h2;
    for (int i = 0; i < s4.order(); ++i)
        if (elems[i][3] == 3) h1.push_back(i);
    // the subgroup generated by the 4-cycle (0 1 2 3)
    Perm c = {1, 2, 3, 0};
    Perm cur = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < s4.order(); ++i)
            if (elems[i] == cur) {
                h2.push_back(i);
                break;
            }
        Perm next(4);
        for (int i = 0; i < 4; ++i) next[i] = c[cur[i]];
        cur = next;
    }
    if (h1.size() != 6 || h2.size() != 4)
        throw std::logic_error("s4_pair: subgroup enumeration failed");
    return exact_factorization(s4, h1, h2, "S4-split");
}

}  // namespace qext::fixtures
