#include "bclass/hom.hpp"

#include <algorithm>
#include <map>

namespace bclass {

bool Homomorphism::is_trivial() const {
  int id = target.ambient->identity_index();
  for (int v : table)
    if (v != id) return false;
  return true;
}

Homomorphism identity_hom(const Subgroup& P) {
  Homomorphism h;
  h.source = P;
  h.target = P;
  h.table = P.members;
  h.injective = true;
  h.kind = HomKind::isomorphism;
  return h;
}

Homomorphism inclusion_hom(const Subgroup& P, const Subgroup& Q) {
  if (P.ambient != Q.ambient)
    throw AmbientMismatch("inclusion requires a common ambient group");
  for (int m : P.members)
    if (!Q.contains(m)) throw AmbientMismatch("inclusion source not contained in target");
  Homomorphism h;
  h.source = P;
  h.target = Q;
  h.table = P.members;
  h.injective = true;
  h.kind = HomKind::inclusion;
  return h;
}

Homomorphism conjugation_hom(const FiniteGroup& G, int g, const Subgroup& P,
                             const Subgroup& Q) {
  if (P.ambient != &G || Q.ambient != &G)
    throw AmbientMismatch("conjugation requires subgroups of the given group");
  Homomorphism h;
  h.source = P;
  h.target = Q;
  h.table.reserve(P.members.size());
  for (int m : P.members) {
    int im = G.conj(g, m);
    if (!Q.contains(im))
      throw AmbientMismatch("conjugate of source does not land in target");
    h.table.push_back(im);
  }
  h.injective = true;
  h.kind = HomKind::conjugation;
  return h;
}

Homomorphism compose_homs(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target.ambient != outer.source.ambient)
    throw AmbientMismatch("compose: inner target and outer source disagree");
  Homomorphism h;
  h.source = inner.source;
  h.target = outer.target;
  h.table.reserve(inner.table.size());
  for (int v : inner.table) {
    int pos = outer.source.pos_of(v);
    if (pos < 0)
      throw AmbientMismatch("compose: image escapes outer domain");
    h.table.push_back(outer.table[pos]);
  }
  h.injective = table_injective(h.table);
  h.kind = HomKind::general;
  return h;
}

Homomorphism restrict_hom(const Homomorphism& phi, const Subgroup& P2) {
  if (P2.ambient != phi.source.ambient)
    throw AmbientMismatch("restrict: subgroup of a different group");
  Homomorphism h;
  h.source = P2;
  h.target = phi.target;
  h.table.reserve(P2.members.size());
  for (int m : P2.members) {
    int pos = phi.source.pos_of(m);
    if (pos < 0) throw AmbientMismatch("restrict: not a subgroup of the domain");
    h.table.push_back(phi.table[pos]);
  }
  h.injective = table_injective(h.table);
  h.kind = phi.kind == HomKind::conjugation ? HomKind::conjugation
                                            : HomKind::general;
  return h;
}

Homomorphism invert_isomorphism(const Homomorphism& phi) {
  if (!phi.injective ||
      phi.table.size() != phi.target.members.size())
    throw InvalidArgument("invert: not an isomorphism onto its target");
  Homomorphism h;
  h.source = phi.target;
  h.target = phi.source;
  h.table.assign(phi.target.members.size(), -1);
  for (size_t i = 0; i < phi.table.size(); ++i) {
    int pos = phi.target.pos_of(phi.table[i]);
    if (pos < 0) throw InvalidArgument("invert: image not inside target");
    h.table[pos] = phi.source.members[i];
  }
  for (int v : h.table)
    if (v < 0) throw InvalidArgument("invert: not surjective onto target");
  h.injective = true;
  h.kind = HomKind::isomorphism;
  return h;
}

bool is_multiplicative(const Homomorphism& phi) {
  const FiniteGroup& S = *phi.source.ambient;
  const FiniteGroup& T = *phi.target.ambient;
  const auto& mem = phi.source.members;
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j < mem.size(); ++j) {
      int prod = S.mul(mem[i], mem[j]);
      int pos = phi.source.pos_of(prod);
      if (pos < 0) return false;  // domain not closed
      if (phi.table[pos] != T.mul(phi.table[i], phi.table[j])) return false;
    }
  }
  int idpos = phi.source.pos_of(S.identity_index());
  return idpos >= 0 && phi.table[idpos] == T.identity_index();
}

bool table_injective(const std::vector<int>& table) {
  std::vector<int> sorted(table);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Backtracking state for homomorphism enumeration.
struct HomSearch {
  const FiniteGroup* S;
  const FiniteGroup* T;
  const Subgroup* source;
  const Subgroup* target;
  bool injective_only;
  std::vector<int> gens;                      // generating sequence
  const std::function<bool(const Homomorphism&)>* visit;
  bool stopped = false;

  // partial hom as a map source-ambient index -> target-ambient index,
  // over a domain that is always a subgroup
  std::vector<int> image;   // -1 when unset, indexed by source-ambient index
  std::vector<int> domain;  // current domain, insertion order

  // Extend the partial table by gen -> y and close. Returns the number of
  // domain entries added, or -1 on contradiction (after rollback).
  int extend(int gen, int y) {
    size_t base = domain.size();
    std::vector<int> work;
    auto add = [&](int x, int im) -> bool {
      if (image[x] >= 0) return image[x] == im;
      if (injective_only) {
        for (int d : domain)
          if (image[d] == im) return false;
      }
      image[x] = im;
      domain.push_back(x);
      work.push_back(x);
      return true;
    };
    bool ok = add(gen, y);
    while (ok && !work.empty()) {
      int x = work.back();
      work.pop_back();
      for (size_t i = 0; i < domain.size() && ok; ++i) {
        int z = domain[i];
        ok = add(S->mul(x, z), T->mul(image[x], image[z])) &&
             add(S->mul(z, x), T->mul(image[z], image[x]));
      }
    }
    if (!ok) {
      rollback(base);
      return -1;
    }
    return static_cast<int>(domain.size() - base);
  }

  void rollback(size_t base) {
    while (domain.size() > base) {
      image[domain.back()] = -1;
      domain.pop_back();
    }
  }

  void recurse(size_t level) {
    if (stopped) return;
    if (level == gens.size()) {
      Homomorphism h;
      h.source = *source;
      h.target = *target;
      h.table.reserve(source->members.size());
      for (int m : source->members) h.table.push_back(image[m]);
      h.injective = table_injective(h.table);
      h.kind = HomKind::general;
      if (!(*visit)(h)) stopped = true;
      return;
    }
    int gen = gens[level];
    int gen_order = S->element_order(gen);
    for (int y : target->members) {
      int y_order = T->element_order(y);
      if (injective_only ? y_order != gen_order : gen_order % y_order != 0)
        continue;
      int added = extend(gen, y);
      if (added < 0) continue;
      recurse(level + 1);
      rollback(domain.size() - added);
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_homomorphisms(
    const Subgroup& source, const Subgroup& target, bool injective_only,
    const Caps& caps, const std::function<bool(const Homomorphism&)>& visit) {
  if (source.order() > caps.max_hom_source)
    throw CapExceeded("homomorphism source exceeds cap " +
                      std::to_string(caps.max_hom_source));
  if (injective_only && source.order() > target.order()) return;

  HomSearch hs;
  hs.S = source.ambient;
  hs.T = target.ambient;
  hs.source = &source;
  hs.target = &target;
  hs.injective_only = injective_only;
  hs.gens = minimal_generating_sequence(source);
  hs.visit = &visit;
  hs.image.assign(hs.S->order(), -1);
  hs.image[hs.S->identity_index()] = hs.T->identity_index();
  hs.domain.push_back(hs.S->identity_index());
  hs.recurse(0);
}

std::vector<Homomorphism> homomorphisms(const Subgroup& P, const Subgroup& G,
                                        bool injective_only, const Caps& caps) {
  std::vector<Homomorphism> out;
  enumerate_homomorphisms(P, G, injective_only, caps,
                          [&](const Homomorphism& h) {
                            out.push_back(h);
                            return true;
                          });
  std::sort(out.begin(), out.end(),
            [](const Homomorphism& a, const Homomorphism& b) {
              return a.table < b.table;
            });
  return out;
}

std::vector<Homomorphism> homomorphisms(const FiniteGroup& P,
                                        const FiniteGroup& G,
                                        bool injective_only, const Caps& caps) {
  return homomorphisms(P.full(), G.full(), injective_only, caps);
}

int AutomorphismClasses::aut_index_of(const std::vector<int>& table) const {
  auto it = std::lower_bound(aut_tables_.begin(), aut_tables_.end(), table);
  if (it == aut_tables_.end() || *it != table) return -1;
  return static_cast<int>(it - aut_tables_.begin());
}

AutomorphismClasses automorphism_classes(const FiniteGroup& Q,
                                         const Caps& caps) {
  AutomorphismClasses ac;
  ac.aut = isomorphisms_between(Q, Q, caps);
  ac.aut_tables_.reserve(ac.aut.size());
  for (const Homomorphism& a : ac.aut) ac.aut_tables_.push_back(a.table);

  // inner automorphisms, one per element, deduplicated by table
  std::map<std::vector<int>, Homomorphism> inner;
  Subgroup full = Q.full();
  for (int q = 0; q < Q.order(); ++q) {
    Homomorphism c = conjugation_hom(Q, q, full, full);
    c.kind = HomKind::isomorphism;
    inner.emplace(c.table, c);
  }
  for (auto& [_, h] : inner) ac.inn.push_back(h);

  // coset decomposition Aut = ⊔ α·Inn
  ac.coset_of.assign(ac.aut.size(), -1);
  for (size_t i = 0; i < ac.aut.size(); ++i) {
    if (ac.coset_of[i] >= 0) continue;
    int rep = static_cast<int>(ac.out_reps.size());
    ac.out_reps.push_back(ac.aut[i]);
    for (const Homomorphism& inn : ac.inn) {
      Homomorphism comp = compose_homs(ac.aut[i], inn);
      int j = ac.aut_index_of(comp.table);
      if (j < 0) throw Error("automorphism set not closed under composition");
      ac.coset_of[j] = rep;
    }
    if (ac.coset_of[i] != rep)
      throw Error("inner automorphism coset decomposition failed");
  }
  if (ac.aut.size() != ac.inn.size() * ac.out_reps.size())
    throw Error("|Aut| != |Inn| * |Out|");
  return ac;
}

std::vector<Homomorphism> isomorphisms_between(const Subgroup& P,
                                               const Subgroup& Q,
                                               const Caps& caps) {
  std::vector<Homomorphism> out;
  if (P.order() != Q.order()) return out;
  // fast reject on element-order multisets
  std::vector<int> op, oq;
  for (int m : P.members) op.push_back(P.ambient->element_order(m));
  for (int m : Q.members) oq.push_back(Q.ambient->element_order(m));
  std::sort(op.begin(), op.end());
  std::sort(oq.begin(), oq.end());
  if (op != oq) return out;

  for (Homomorphism& h : homomorphisms(P, Q, true, caps)) {
    h.kind = HomKind::isomorphism;  // injective + equal orders = bijective
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Homomorphism> isomorphisms_between(const FiniteGroup& P,
                                               const FiniteGroup& Q,
                                               const Caps& caps) {
  return isomorphisms_between(P.full(), Q.full(), caps);
}

bool exists_isomorphism(const FiniteGroup& P, const FiniteGroup& Q,
                        const Caps& caps) {
  if (P.order() != Q.order()) return false;
  std::vector<int> op, oq;
  for (int i = 0; i < P.order(); ++i) op.push_back(P.element_order(i));
  for (int i = 0; i < Q.order(); ++i) oq.push_back(Q.element_order(i));
  std::sort(op.begin(), op.end());
  std::sort(oq.begin(), oq.end());
  if (op != oq) return false;

  bool found = false;
  enumerate_homomorphisms(P.full(), Q.full(), true, caps,
                          [&](const Homomorphism&) {
                            found = true;
                            return false;  // stop at the first witness
                          });
  return found;
}

}  // namespace bclass
