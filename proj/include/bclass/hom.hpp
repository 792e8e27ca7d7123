#pragma once

#include <functional>
#include <vector>

#include "bclass/group.hpp"

namespace bclass {

enum class HomKind { general, inclusion, conjugation, isomorphism };

// A verified multiplicative map between subgroups (a whole group is its
// full() subgroup view). table[i] is the target-ambient element index of the
// image of source.members[i].
struct Homomorphism {
  Subgroup source;
  Subgroup target;
  std::vector<int> table;
  bool injective = false;
  HomKind kind = HomKind::general;

  int image_of(int src_elem) const {
    int pos = source.pos_of(src_elem);
    if (pos < 0) throw ElementNotInAmbient("element outside hom domain");
    return table[pos];
  }
  bool is_trivial() const;
};

Homomorphism identity_hom(const Subgroup& P);
Homomorphism inclusion_hom(const Subgroup& P, const Subgroup& Q);  // P ⊆ Q
// c_g restricted to P, landing in Q (requires gPg⁻¹ ⊆ Q).
Homomorphism conjugation_hom(const FiniteGroup& G, int g, const Subgroup& P,
                             const Subgroup& Q);

Homomorphism compose_homs(const Homomorphism& outer, const Homomorphism& inner);
Homomorphism restrict_hom(const Homomorphism& phi, const Subgroup& P2);
Homomorphism invert_isomorphism(const Homomorphism& phi);

// Exhaustive multiplicativity check over all source pairs.
bool is_multiplicative(const Homomorphism& phi);
bool table_injective(const std::vector<int>& table);

// Enumerates all homomorphisms source → target by backtracking on the images
// of a minimal generating sequence, validating each partial assignment by
// closing the partial table. The visitor returns false to stop early.
void enumerate_homomorphisms(
    const Subgroup& source, const Subgroup& target, bool injective_only,
    const Caps& caps, const std::function<bool(const Homomorphism&)>& visit);

std::vector<Homomorphism> homomorphisms(const Subgroup& P, const Subgroup& G,
                                        bool injective_only,
                                        const Caps& caps = default_caps());
std::vector<Homomorphism> homomorphisms(const FiniteGroup& P,
                                        const FiniteGroup& G,
                                        bool injective_only,
                                        const Caps& caps = default_caps());

struct AutomorphismClasses {
  std::vector<Homomorphism> aut;       // sorted by table
  std::vector<Homomorphism> inn;       // conjugation maps, sorted by table
  std::vector<Homomorphism> out_reps;  // one per Inn-coset
  std::vector<int> coset_of;           // aut index -> out_reps index
  int aut_index_of(const std::vector<int>& table) const;

  // internal lookup, filled by automorphism_classes
  std::vector<std::vector<int>> aut_tables_;
};

AutomorphismClasses automorphism_classes(const FiniteGroup& Q,
                                         const Caps& caps = default_caps());

std::vector<Homomorphism> isomorphisms_between(const Subgroup& P,
                                               const Subgroup& Q,
                                               const Caps& caps = default_caps());
std::vector<Homomorphism> isomorphisms_between(const FiniteGroup& P,
                                               const FiniteGroup& Q,
                                               const Caps& caps = default_caps());
bool exists_isomorphism(const FiniteGroup& P, const FiniteGroup& Q,
                        const Caps& caps = default_caps());

}  // namespace bclass
