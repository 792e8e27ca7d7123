#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bclass/hom.hpp"

namespace bclass {

// The fusion system of G over a Sylow p-subgroup S: objects are all
// subgroups of S, morphisms the conjugation-induced maps, stored as full
// tables for every ordered object pair.
struct FusionSystem {
  int prime = 2;
  const FiniteGroup* ambient = nullptr;
  std::string ambient_label;
  Subgroup base;                   // S
  std::vector<Subgroup> objects;   // canonical order
  // hom_table[i * objects.size() + j]: morphisms objects[i] -> objects[j],
  // sorted by table
  std::vector<std::vector<Homomorphism>> hom_table;

  int num_objects() const { return static_cast<int>(objects.size()); }
  const std::vector<Homomorphism>& homs(int from, int to) const {
    return hom_table[from * objects.size() + to];
  }
  int object_index(const std::vector<int>& members) const;  // -1 if absent
  bool contains(int from, int to, const std::vector<int>& table) const;

  std::map<std::vector<int>, int> object_index_;
};

// {c_g restricted to P : g in G, gPg⁻¹ ≤ Q}, deduplicated by table.
std::vector<Homomorphism> fusion_hom_set(const FiniteGroup& G,
                                         const Subgroup& P, const Subgroup& Q);

FusionSystem build_fusion_system(const FiniteGroup& G, int p,
                                 const Caps& caps = default_caps());
// Same but over a caller-chosen Sylow subgroup S of G.
FusionSystem build_fusion_system_on(const FiniteGroup& G, const Subgroup& S,
                                    int p, const Caps& caps = default_caps());

// Throws Error with a description if any fusion-system axiom fails:
// injectivity, S-fusion containment, composition closure, restriction
// closure. Checks are exhaustive.
void check_fusion_axioms(const FusionSystem& F);

struct FusionIsomorphism {
  Homomorphism gamma;  // isomorphism base(F1) -> base(F2)
  const FusionSystem* source = nullptr;
  const FusionSystem* target = nullptr;
};

// Transport condition in both directions, over every ordered object pair and
// every morphism.
bool is_fusion_isomorphism(const Homomorphism& gamma, const FusionSystem& F1,
                           const FusionSystem& F2);

// Searches the isomorphisms base(F1) -> base(F2) lazily; prefilters on base
// order, per-order object counts, and the multiset of hom-set sizes.
std::optional<FusionIsomorphism> find_fusion_isomorphism(
    const FusionSystem& F1, const FusionSystem& F2,
    const Caps& caps = default_caps());

// Diagnostic for non-isomorphism reports: which prefilter failed, or how
// many isomorphisms were exhausted.
std::string fusion_mismatch_detail(const FusionSystem& F1,
                                   const FusionSystem& F2,
                                   const Caps& caps = default_caps());

}  // namespace bclass
