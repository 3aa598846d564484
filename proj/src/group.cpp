#include "qext/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qext {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
                         std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())),
      name_(std::move(name)),
      table_(std::move(table)),
      labels_(std::move(labels)) {
    if (n_ == 0) throw std::invalid_argument(name_ + ": empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument(name_ + ": table is not square");
        for (Elem x : row)
            if (x < 0 || x >= n_)
                throw std::invalid_argument(name_ + ": table entry out of range");
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument(name_ + ": wrong label count");
    validate();
}

void FiniteGroup::validate() {
    // identity must sit at index 0
    for (int a = 0; a < n_; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw std::invalid_argument(name_ + ": no identity at index 0");

    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0)
            throw std::invalid_argument(name_ + ": no inverse for element " +
                                        std::to_string(a));
    }

    auto check = [&](int a, int b, int c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument(name_ + ": not associative at (" +
                                        std::to_string(a) + "," + std::to_string(b) +
                                        "," + std::to_string(c) + ")");
    };
    if (n_ <= kExhaustiveOrder) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eedf00dULL);
        for (int k = 0; k < 20000; ++k)
            check(int(rng() % n_), int(rng() % n_), int(rng() % n_));
    }
}

Elem FiniteGroup::pow(Elem a, long k) const {
    if (k < 0) return pow(inverse_[a], -k);
    Elem r = 0, b = a;
    while (k > 0) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<Elem> FiniteGroup::center() const {
    std::vector<Elem> z;
    for (int a = 0; a < n_; ++a) {
        bool central = true;
        for (int b = 0; b < n_ && central; ++b)
            central = (table_[a][b] == table_[b][a]);
        if (central) z.push_back(a);
    }
    return z;
}

int FiniteGroup::elem_order(Elem a) const {
    int k = 1;
    Elem x = a;
    while (x != 0) { x = mul(x, a); ++k; }
    return k;
}

bool FiniteGroup::is_subgroup(const std::vector<Elem>& elems) const {
    std::set<Elem> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (Elem a : s) {
        if (!s.count(inverse_[a])) return false;
        for (Elem b : s)
            if (!s.count(table_[a][b])) return false;
    }
    return true;
}

namespace {

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::string cycle_notation(const Perm& p) {
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

}  // namespace

FiniteGroup group_from_generators(const std::string& name, int degree,
                                  const std::vector<Perm>& generators, int max_order,
                                  std::vector<Perm>* elements_out) {
    if (degree <= 0) throw std::invalid_argument(name + ": bad degree");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument(name + ": generator degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[v])
                throw std::invalid_argument(name + ": generator is not a permutation");
            hit[v] = 1;
        }
    }

    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::map<Perm, int> index;
    std::vector<Perm> elems;
    std::queue<Perm> todo;
    index[id] = 0;
    elems.push_back(id);
    todo.push(id);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop();
        for (const auto& g : generators) {
            for (const Perm& prod : {compose(cur, g), compose(g, cur)}) {
                if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                    elems.push_back(prod);
                    if (static_cast<int>(elems.size()) > max_order)
                        throw std::invalid_argument(name + ": closure exceeds order bound " +
                                                    std::to_string(max_order));
                    todo.push(prod);
                }
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(cycle_notation(p));
    if (elements_out) *elements_out = elems;
    return FiniteGroup(name, std::move(table), std::move(labels));
}

FiniteGroup cyclic_group(int m) {
    if (m <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
    return FiniteGroup("Z" + std::to_string(m), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, int max_order) {
    long n = static_cast<long>(G.order()) * H.order();
    if (n > max_order)
        throw std::invalid_argument("direct_product: order " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_order));
    const int nh = H.order();
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < nh; ++b) {
            labels[a * nh + b] = "(" + G.label(a) + "," + H.label(b) + ")";
            for (int c = 0; c < G.order(); ++c)
                for (int d = 0; d < nh; ++d)
                    table[a * nh + b][c * nh + d] = G.mul(a, c) * nh + H.mul(b, d);
        }
    return FiniteGroup(G.name() + "x" + H.name(), std::move(table), std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                               const std::vector<std::vector<Elem>>& action,
                               int max_order) {
    const int nn = N.order(), nh = H.order();
    if (static_cast<int>(action.size()) != nh)
        throw std::invalid_argument("semidirect_product: need one map per element of H");
    for (int h = 0; h < nh; ++h) {
        const auto& a = action[h];
        if (static_cast<int>(a.size()) != nn)
            throw std::invalid_argument("semidirect_product: action map has wrong size");
        std::vector<char> hit(nn, 0);
        for (Elem v : a) {
            if (v < 0 || v >= nn || hit[v])
                throw std::invalid_argument("semidirect_product: action[" +
                                            std::to_string(h) + "] is not a bijection");
            hit[v] = 1;
        }
        for (int x = 0; x < nn; ++x)
            for (int y = 0; y < nn; ++y)
                if (a[N.mul(x, y)] != N.mul(a[x], a[y]))
                    throw std::invalid_argument("semidirect_product: action[" +
                                                std::to_string(h) +
                                                "] is not an automorphism");
    }
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nh; ++k)
            for (int x = 0; x < nn; ++x)
                if (action[H.mul(h, k)][x] != action[h][action[k][x]])
                    throw std::invalid_argument(
                        "semidirect_product: action is not a homomorphism");

    long n = static_cast<long>(nn) * nh;
    if (n > max_order)
        throw std::invalid_argument("semidirect_product: order exceeds bound");
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < nn; ++a)
        for (int h = 0; h < nh; ++h) {
            labels[a * nh + h] = "(" + N.label(a) + ")." + H.label(h);
            for (int b = 0; b < nn; ++b)
                for (int k = 0; k < nh; ++k)
                    table[a * nh + h][b * nh + k] =
                        N.mul(a, action[h][b]) * nh + H.mul(h, k);
        }
    return FiniteGroup(N.name() + ":" + H.name(), std::move(table), std::move(labels));
}

}  // namespace qext
