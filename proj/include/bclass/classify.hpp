#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bclass/catalog.hpp"
#include "bclass/fusion.hpp"
#include "bclass/repmod.hpp"

namespace bclass {

enum class VerdictKind { stable_mp, fusion_alt, condition2_bounded };

// One p-group isomorphism type checked by a classifier, with the dimensions
// of the compared modules when they were computed.
struct CandidateQ {
  std::string label;
  int order = 1;
  std::vector<std::string> generators;  // cycle strings
  int dim_left = -1;
  int dim_right = -1;
};

struct FusionWitness {
  // gamma as generator-image pairs, cycle notation
  std::vector<std::pair<std::string, std::string>> generator_images;
};

struct ModuleWitness {
  std::string q_label;
  int q_order = 1;
  std::vector<std::string> q_generators;
  int dim_left = 0;
  int dim_right = 0;
  std::string detail;
};

struct Verdict {
  VerdictKind kind = VerdictKind::stable_mp;
  bool equivalent = false;
  std::optional<FusionWitness> fusion_witness;
  std::optional<ModuleWitness> module_witness;
  std::vector<CandidateQ> candidate_Q_list;
  std::string bound_note;
  std::string notes;
};

// Stable classification via injective representation modules: for every
// p-group type Q occurring in a Sylow p-subgroup of either group, the
// F_p InjRep(Q,-) modules must be isomorphic as Out(Q)-modules. Exact: for
// any other p-group both modules are zero.
Verdict stable_equivalent_mp(const FiniteGroup& G, const FiniteGroup& G2,
                             int p, const Caps& caps = default_caps(),
                             uint64_t seed = kDefaultSeed);

// The analogous check on full representation modules F_p Rep(Q,-), over the
// catalog's p-groups of order up to order_bound. Explicitly bounded: the
// quantifier ranges over all p-groups, the check over the listed ones.
Verdict condition2_bounded(const FiniteGroup& G, const FiniteGroup& G2, int p,
                           int order_bound, const Catalog& catalog,
                           const Caps& caps = default_caps(),
                           uint64_t seed = kDefaultSeed);

// Classification by fusion systems: equivalent iff an isomorphism of fusion
// systems exists. A positive verdict carries a verified witness.
Verdict alternative_classification(const FiniteGroup& G, const FiniteGroup& G2,
                                   int p, const Caps& caps = default_caps());

struct SearchResult {
  int pairs_scanned = 0;
  std::vector<std::pair<std::string, std::string>> stable_equivalent;
  std::vector<std::pair<std::string, std::string>> distinguishing;
};

// All unordered pairs from the list that are stably equivalent but not
// fusion-equivalent. May legitimately be empty at small scale.
SearchResult distinguishing_search(
    const std::vector<const FiniteGroup*>& groups, int p,
    const Caps& caps = default_caps(), uint64_t seed = kDefaultSeed);

struct OracleScan {
  long long triples = 0;
  long long disagreements = 0;
};

// Exhaustive agreement scan between fusion membership and the Burnside
// stable-map equality, over all (P, Q, phi) with P, Q subgroups of a Sylow
// p-subgroup of G.
OracleScan inclusion_oracle_scan(const FiniteGroup& G, int p,
                                 const Caps& caps = default_caps());

}  // namespace bclass
