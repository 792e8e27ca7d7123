#include "bclass/classify.hpp"

#include <algorithm>
#include <deque>

#include "bclass/burnside.hpp"

namespace bclass {

namespace {

std::vector<std::string> generator_cycles(const FiniteGroup& Q) {
  std::vector<std::string> out;
  for (const Perm& g : Q.generators()) out.push_back(to_cycles(g));
  if (out.empty()) out.push_back("()");
  return out;
}

CandidateQ describe(const FiniteGroup& Q) {
  CandidateQ c;
  c.label = Q.name();
  c.order = Q.order();
  c.generators = generator_cycles(Q);
  return c;
}

// One abstract copy per isomorphism type of non-trivial subgroup of the two
// Sylow subgroups, deduplicated first by conjugacy, then by isomorphism.
// Sorted by order; within an order, first-seen wins.
std::deque<FiniteGroup> candidate_types(const Subgroup& S, const Subgroup& S2,
                                        const Caps& caps) {
  std::deque<FiniteGroup> types;
  auto feed = [&](const Subgroup& syl, const char* tag) {
    FiniteGroup Sgrp = as_group(syl, tag);
    for (const SubgroupClass& cls : subgroup_conjugacy_classes(Sgrp, caps)) {
      if (cls.representative.order() == 1) continue;
      FiniteGroup Q = as_group(cls.representative, "");
      bool known = false;
      for (const FiniteGroup& T : types)
        if (exists_isomorphism(T, Q, caps)) {
          known = true;
          break;
        }
      if (!known) types.push_back(std::move(Q));
    }
  };
  feed(S, "S");
  feed(S2, "S'");
  std::stable_sort(types.begin(), types.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) {
                     return a.order() < b.order();
                   });
  int counter = 0;
  std::deque<FiniteGroup> named;
  for (FiniteGroup& t : types) {
    std::string label =
        "Q" + std::to_string(t.order()) + "." + std::to_string(++counter);
    named.emplace_back(label, t.degree(),
                       std::vector<Perm>(t.generators()),
                       std::vector<Perm>(t.elements()));
  }
  return named;
}

// Compare Rep sets at one candidate; fills dims, returns true when the
// modules are isomorphic. Fast paths first, intertwiner decision last.
bool candidate_matches(const RepSet& X, const RepSet& Y, int p, uint64_t seed,
                       CandidateQ& entry) {
  entry.dim_left = X.num_classes();
  entry.dim_right = Y.num_classes();
  if (X.num_classes() != Y.num_classes()) return false;
  if (X.num_classes() == 0) return true;
  if (out_sets_isomorphic(X, Y)) return true;
  return modules_isomorphic(linearize(X, p), linearize(Y, p), seed);
}

const char* kExactNote =
    "exact over all p-groups: InjRep(Q,-) is empty unless Q embeds in a "
    "Sylow p-subgroup, so the listed subgroup types cover every case";

}  // namespace

Verdict stable_equivalent_mp(const FiniteGroup& G, const FiniteGroup& G2,
                             int p, const Caps& caps, uint64_t seed) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  Verdict v;
  v.kind = VerdictKind::stable_mp;
  v.bound_note = kExactNote;

  Subgroup S = sylow_subgroup(G, p);
  Subgroup S2 = sylow_subgroup(G2, p);

  if (&G == &G2) {
    v.equivalent = true;
    v.notes = "identical inputs";
    for (const FiniteGroup& Q : candidate_types(S, S2, caps))
      v.candidate_Q_list.push_back(describe(Q));
    return v;
  }

  std::deque<FiniteGroup> types = candidate_types(S, S2, caps);
  for (const FiniteGroup& Q : types) {
    CandidateQ entry = describe(Q);
    RepSet X = rep_set(Q, G, true, caps);
    RepSet Y = rep_set(Q, G2, true, caps);
    bool ok = candidate_matches(X, Y, p, seed, entry);
    v.candidate_Q_list.push_back(entry);
    if (!ok) {
      v.equivalent = false;
      ModuleWitness w;
      w.q_label = entry.label;
      w.q_order = entry.order;
      w.q_generators = entry.generators;
      w.dim_left = entry.dim_left;
      w.dim_right = entry.dim_right;
      w.detail = entry.dim_left != entry.dim_right
                     ? "module dimensions differ"
                     : "no invertible intertwiner exists";
      v.module_witness = w;
      return v;
    }
  }
  v.equivalent = true;
  return v;
}

Verdict condition2_bounded(const FiniteGroup& G, const FiniteGroup& G2, int p,
                           int order_bound, const Catalog& catalog,
                           const Caps& caps, uint64_t seed) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  // order_bound must be a power of p
  int b = order_bound;
  while (b > 1 && b % p == 0) b /= p;
  if (b != 1 || order_bound < 1)
    throw InvalidArgument("order_bound must be a p-power");

  Verdict v;
  v.kind = VerdictKind::condition2_bounded;
  v.bound_note =
      "bounded: Rep(Q,-) compared for catalog p-groups of order <= " +
      std::to_string(order_bound) + " only; the condition quantifies over "
      "all p-groups";

  // catalog must offer at least one p-group of every order p^k <= bound
  for (int q = p; q <= order_bound; q *= p) {
    bool have = false;
    for (const CatalogEntry& e : catalog.entries())
      if (e.group.order() == q && p_part(q, p) == q) have = true;
    if (!have)
      throw CatalogInsufficient("catalog has no p-group of order " +
                                std::to_string(q));
  }

  std::vector<const FiniteGroup*> candidates;
  for (const CatalogEntry& e : catalog.entries()) {
    int n = e.group.order();
    if (n > 1 && n <= order_bound && p_part(n, p) == n) {
      bool dup = false;
      for (const FiniteGroup* q : candidates)
        if (exists_isomorphism(*q, e.group, caps)) dup = true;
      if (!dup) candidates.push_back(&e.group);
    }
  }

  if (&G == &G2) {
    v.equivalent = true;
    v.notes = "identical inputs";
    for (const FiniteGroup* Q : candidates)
      v.candidate_Q_list.push_back(describe(*Q));
    return v;
  }

  for (const FiniteGroup* Q : candidates) {
    CandidateQ entry = describe(*Q);
    RepSet X = rep_set(*Q, G, false, caps);
    RepSet Y = rep_set(*Q, G2, false, caps);
    bool ok = candidate_matches(X, Y, p, seed, entry);
    v.candidate_Q_list.push_back(entry);
    if (!ok) {
      v.equivalent = false;
      ModuleWitness w;
      w.q_label = entry.label;
      w.q_order = entry.order;
      w.q_generators = entry.generators;
      w.dim_left = entry.dim_left;
      w.dim_right = entry.dim_right;
      w.detail = entry.dim_left != entry.dim_right
                     ? "module dimensions differ"
                     : "no invertible intertwiner exists";
      v.module_witness = w;
      return v;
    }
  }
  v.equivalent = true;
  return v;
}

Verdict alternative_classification(const FiniteGroup& G, const FiniteGroup& G2,
                                   int p, const Caps& caps) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  Verdict v;
  v.kind = VerdictKind::fusion_alt;
  v.bound_note = "decided by exhaustive fusion-system comparison";

  FusionSystem F1 = build_fusion_system(G, p, caps);
  FusionSystem F2 = build_fusion_system(G2, p, caps);
  std::optional<FusionIsomorphism> w = find_fusion_isomorphism(F1, F2, caps);
  if (w) {
    v.equivalent = true;
    FusionWitness fw;
    const Subgroup& S = F1.base;
    for (int g : minimal_generating_sequence(S)) {
      fw.generator_images.emplace_back(
          to_cycles(G.element(g)),
          to_cycles(G2.element(w->gamma.image_of(g))));
    }
    if (fw.generator_images.empty())
      fw.generator_images.emplace_back("()", "()");
    v.fusion_witness = fw;
    v.notes =
        "fusion systems isomorphic; the classifying spectra agree as objects "
        "under the Sylow classifying spectrum and the p-completed classifying "
        "spaces are homotopy equivalent";
  } else {
    v.equivalent = false;
    v.notes = "fusion systems not isomorphic (" +
              fusion_mismatch_detail(F1, F2, caps) +
              "); neither the spectrum-level triangle nor an unstable "
              "equivalence can exist";
  }
  return v;
}

SearchResult distinguishing_search(const std::vector<const FiniteGroup*>& groups,
                                   int p, const Caps& caps, uint64_t seed) {
  SearchResult r;
  for (size_t i = 0; i < groups.size(); ++i) {
    for (size_t j = i + 1; j < groups.size(); ++j) {
      ++r.pairs_scanned;
      Verdict stable = stable_equivalent_mp(*groups[i], *groups[j], p, caps, seed);
      if (!stable.equivalent) continue;
      r.stable_equivalent.emplace_back(groups[i]->name(), groups[j]->name());
      Verdict fusion = alternative_classification(*groups[i], *groups[j], p, caps);
      if (!fusion.equivalent)
        r.distinguishing.emplace_back(groups[i]->name(), groups[j]->name());
    }
  }
  return r;
}

OracleScan inclusion_oracle_scan(const FiniteGroup& G, int p,
                                 const Caps& caps) {
  OracleScan scan;
  FusionSystem F = build_fusion_system(G, p, caps);
  for (int i = 0; i < F.num_objects(); ++i) {
    const Subgroup& P = F.objects[i];
    BurnsideBasis basis = burnside_basis(P, G, caps);
    for (int j = 0; j < F.num_objects(); ++j) {
      const Subgroup& Q = F.objects[j];
      for (const Homomorphism& phi : homomorphisms(P, Q, false, caps)) {
        bool in_fusion = F.contains(i, j, phi.table);
        bool stable_eq = stable_inclusion_equal(basis, P, Q, phi);
        ++scan.triples;
        if (in_fusion != stable_eq) ++scan.disagreements;
      }
    }
  }
  return scan;
}

}  // namespace bclass
