#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bclass/burnside.hpp"  // VecIntHash
#include "bclass/fpmatrix.hpp"
#include "bclass/hom.hpp"

namespace bclass {

// Rep(Q,G) or InjRep(Q,G): conjugacy classes of homomorphisms Q -> G as an
// Out(Q)-set. The action convention is class(rho) -> class(rho ∘ alpha⁻¹)
// for an Out(Q) coset representative alpha; inner representatives act
// trivially, so the action is well defined on cosets.
struct RepSet {
  const FiniteGroup* Q = nullptr;
  const FiniteGroup* G = nullptr;
  bool injective_only = false;
  std::vector<Homomorphism> classes;  // canonical orbit representatives
  AutomorphismClasses auts;           // Aut/Inn/Out data of Q

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_out() const { return static_cast<int>(auts.out_reps.size()); }
  int class_of_table(const std::vector<int>& table) const;

  // Permutation of class indices induced by out representative k, computed
  // on demand and memoized. c -> class(classes[c] ∘ out_reps[k]⁻¹).
  const std::vector<int>& action_of(int out_index) const;
  // Action of an arbitrary automorphism on one class.
  int act_on_class(const Homomorphism& alpha, int cls) const;

  std::unordered_map<std::vector<int>, int, VecIntHash> class_of_;
  mutable std::map<int, std::vector<int>> action_cache_;
};

RepSet rep_set(const FiniteGroup& Q, const FiniteGroup& G, bool injective_only,
               const Caps& caps = default_caps());

// F_p-linearization: one permutation matrix per Out(Q) representative.
struct MatrixModuleFp {
  int p = 2;
  int dim = 0;
  std::vector<std::string> acting_generators;
  std::vector<FpMatrix> matrices;
};

MatrixModuleFp linearize(const RepSet& X, int p);

constexpr uint64_t kDefaultSeed = 0x5eedULL;

// Module isomorphism over the named acting generators: true iff an
// invertible intertwiner exists. Decision route: dimensions, then integral
// permutation characters on the joint matrix group when both modules are
// permutation modules away from the modular case, then the rank profile of
// powers of rho(g)-1 (a conjugation invariant), then search of the
// intertwiner space (exhaustive when it has at most 2^20 elements, else
// seeded random sampling with an exhaustive projective-enumeration
// fallback). Always returns a definite answer.
bool modules_isomorphic(const MatrixModuleFp& M, const MatrixModuleFp& N,
                        uint64_t seed = kDefaultSeed);

// Isomorphism of Out(Q)-sets: matching orbit sizes with conjugate point
// stabilizers. Sufficient for module isomorphism.
bool out_sets_isomorphic(const RepSet& X, const RepSet& Y);

}  // namespace bclass
