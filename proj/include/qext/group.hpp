#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qext {

using Elem = int;  // dense element index; 0 is always the identity

// Finite group given by its multiplication table. Construction validates the
// axioms: exhaustive associativity check below kExhaustiveOrder, random
// triples (seeded) above it. Immutable after construction.
class FiniteGroup {
  public:
    static constexpr int kDefaultMaxOrder = 512;
    static constexpr int kExhaustiveOrder = 64;

    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
                std::vector<std::string> labels = {});

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, long k) const;

    const std::vector<std::vector<Elem>>& table() const { return table_; }
    const std::string& label(Elem a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_abelian() const;
    std::vector<Elem> center() const;
    // order of the cyclic subgroup generated by a
    int elem_order(Elem a) const;
    // true if the given element subset is closed under product and inverse
    bool is_subgroup(const std::vector<Elem>& elems) const;

  private:
    void validate();

    int n_ = 0;
    std::string name_;
    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> inverse_;
    std::vector<std::string> labels_;
};

// Permutations are images of 0..degree-1; composition (p*q)(i) = p(q(i)).
using Perm = std::vector<int>;

// Enumerate the group generated by permutations via closure; fails once the
// order exceeds max_order. The enumerated permutations are written to
// elements_out when given (index order matches the group).
FiniteGroup group_from_generators(const std::string& name, int degree,
                                  const std::vector<Perm>& generators,
                                  int max_order = FiniteGroup::kDefaultMaxOrder,
                                  std::vector<Perm>* elements_out = nullptr);

FiniteGroup cyclic_group(int m);

// Componentwise product; element (a,b) has index a*|H|+b.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                           int max_order = FiniteGroup::kDefaultMaxOrder);

// Group on N x H with (n,h)(m,k) = (n*action[h](m), hk). Every action[h] must
// be an automorphism of N and h -> action[h] a homomorphism.
FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                               const std::vector<std::vector<Elem>>& action,
                               int max_order = FiniteGroup::kDefaultMaxOrder);

}  // namespace qext
