#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bclass/hom.hpp"

namespace bclass {

// A (G,G')-pair: a subgroup H of the source group together with a
// homomorphism into the target group. The source group is supplied by the
// surrounding context (a BurnsideBasis or an explicit argument); H.ambient
// is the group the source lives in.
struct BisetPair {
  Subgroup H;
  Homomorphism phi;  // phi.source == H, phi.target == target.full()
};

BisetPair make_pair(const Subgroup& H, const std::vector<int>& table,
                    const FiniteGroup& target);

// Pair conjugacy: some g in src and h in the target carry one pair to the
// other (c_g on the subgroup, c_h on the images). Decided by direct search
// over src x target; the basis construction uses an independent orbit
// partition instead.
bool pairs_conjugate(const Subgroup& src, const BisetPair& a,
                     const BisetPair& b);
// Source group = full ambient of H. Both pairs must live over the same
// (G, G').
bool pairs_conjugate(const BisetPair& a, const BisetPair& b);

struct VecIntHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Canonical basis of the Burnside module A(src, target): one class per
// conjugacy class of pairs, ordered by (|H|, members, table) of the minimal
// representative. Keeps a lookup from every pair to its class.
struct BurnsideBasis {
  Subgroup source;                  // the source group, as a subgroup view
  const FiniteGroup* target = nullptr;
  std::vector<BisetPair> classes;   // canonical representatives
  std::vector<bool> trivial_flags;  // phi trivial?

  int num_classes() const { return static_cast<int>(classes.size()); }
  int reduced_rank() const;

  // members ++ {-1} ++ table
  std::unordered_map<std::vector<int>, int, VecIntHash> class_of_;
};

BurnsideBasis burnside_basis(const Subgroup& src, const FiniteGroup& target,
                             const Caps& caps = default_caps());
BurnsideBasis burnside_basis(const FiniteGroup& G, const FiniteGroup& G2,
                             const Caps& caps = default_caps());

// Index of the class of `pair`; throws NotFound if the pair is not listed
// (impossible for pairs over the basis's (G, G')).
int canonical_class(const BisetPair& pair, const BurnsideBasis& basis);

// The biset (target x src)/~ attached to a pair, with verified actions.
// Elements are equivalence classes of (x, y), x in target, y in src.
struct ExplicitBiset {
  int size = 0;
  std::vector<std::pair<int, int>> reps;   // minimal (x, y) per class
  std::vector<std::vector<int>> left_action;   // per target element
  std::vector<std::vector<int>> right_action;  // per src member position
};

ExplicitBiset realize_biset(const Subgroup& src, const BisetPair& pair,
                            const Caps& caps = default_caps());

struct BurnsideElement {
  const BurnsideBasis* basis = nullptr;
  std::vector<long long> coeffs;
};

BurnsideElement zero_element(const BurnsideBasis& basis);
BurnsideElement basis_element(const BurnsideBasis& basis, int cls);
BurnsideElement element_add(const BurnsideElement& a, const BurnsideElement& b);
bool element_equal(const BurnsideElement& a, const BurnsideElement& b);
// Equality in the reduced module: coordinates of trivial-map classes are
// quotiented out.
bool element_equal_reduced(const BurnsideElement& a, const BurnsideElement& b);

// Whether [P, iota_Q ∘ phi] = [P, iota_P] in A(P, G) — the stable-map
// equality criterion deciding membership of phi in the fusion system.
bool stable_inclusion_equal(const FiniteGroup& G, const Subgroup& S,
                            const Subgroup& P, const Subgroup& Q,
                            const Homomorphism& phi,
                            const Caps& caps = default_caps());
// Same, against a precomputed basis of A(P, G).
bool stable_inclusion_equal(const BurnsideBasis& basisPG, const Subgroup& P,
                            const Subgroup& Q, const Homomorphism& phi);

}  // namespace bclass
