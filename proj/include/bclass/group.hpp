#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "bclass/caps.hpp"
#include "bclass/error.hpp"
#include "bclass/perm.hpp"

namespace bclass {

class FiniteGroup;

// A subgroup given by the sorted list of element indices into its ambient
// group. The ambient pointer is non-owning; callers keep groups alive.
struct Subgroup {
  const FiniteGroup* ambient = nullptr;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int elem) const;
  int pos_of(int elem) const;  // position in members, -1 if absent
};

bool operator==(const Subgroup& a, const Subgroup& b);
// Canonical subgroup order: by order, then by member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

// A finite permutation group with a fully enumerated, lexicographically
// sorted element set. Index 0 is always the identity.
class FiniteGroup {
public:
  FiniteGroup(std::string name, int degree, std::vector<Perm> generators,
              std::vector<Perm> elements);

  // Closure of a generating set. Throws DegreeMismatch if the generators
  // disagree and CapExceeded if the group grows past caps.max_order.
  static FiniteGroup closure(std::string name, int degree,
                             std::vector<Perm> generators,
                             const Caps& caps = default_caps());

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[i]; }

  int index_of(const Perm& p) const;  // -1 if not an element
  int identity_index() const { return 0; }

  int mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[a * order() + b];
    return index_of_unchecked(elements_[a] * elements_[b]);
  }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const { return element_order_[a]; }

  Subgroup full() const;

private:
  int index_of_unchecked(const Perm& p) const;

  std::string name_;
  int degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inv_;
  std::vector<int> element_order_;
  std::vector<int> mul_table_;  // precomputed for small groups
};

bool is_prime(int p);
int p_part(int n, int p);

Subgroup trivial_subgroup(const FiniteGroup& G);
bool is_subgroup(const Subgroup& H);  // closure + identity + inverses

// Closure of a set of element indices inside G.
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed);

// Greedy irredundant generating sequence, ambient element indices.
std::vector<int> minimal_generating_sequence(const Subgroup& H);

// The subgroup as a standalone group (same degree, renumbered elements).
// Element i of the result is ambient element H.members[i].
FiniteGroup as_group(const Subgroup& H, std::string name);

Subgroup conjugate_subgroup(int g, const Subgroup& H);
Subgroup conjugate_subgroup(const Perm& g, const Subgroup& H);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

// Every subgroup of `within`, in canonical order (order, then member list).
std::vector<Subgroup> all_subgroups(const Subgroup& within,
                                    const Caps& caps = default_caps());
std::vector<Subgroup> all_subgroups(const FiniteGroup& G,
                                    const Caps& caps = default_caps());

struct SubgroupClass {
  Subgroup representative;         // canonically minimal in its class
  std::vector<Subgroup> members;   // the full conjugation orbit
};

std::vector<SubgroupClass> subgroup_conjugacy_classes(
    const FiniteGroup& G, const Caps& caps = default_caps());

// A Sylow p-subgroup by normalizer ascent: start at a subgroup generated by
// an element of order p and extend by p-elements of the normalizer until the
// order equals the p-part of |G|. Returns the trivial subgroup if p ∤ |G|.
// The rng variant randomizes the choices made along the way; results of
// different runs are conjugate in G.
Subgroup sylow_subgroup(const FiniteGroup& G, int p);
Subgroup sylow_subgroup(const FiniteGroup& G, int p, std::mt19937& rng);

}  // namespace bclass
