#include "bclass/burnside.hpp"

#include <algorithm>
#include <deque>

namespace bclass {

namespace {

std::vector<int> pair_key(const std::vector<int>& members,
                          const std::vector<int>& table) {
  std::vector<int> key(members);
  key.push_back(-1);
  key.insert(key.end(), table.begin(), table.end());
  return key;
}

// (members, table) after the source move H -> gHg⁻¹, phi -> phi ∘ c_g⁻¹.
// The new table entry at the position of g·m·g⁻¹ is the old value at m.
std::pair<std::vector<int>, std::vector<int>> source_move(
    const FiniteGroup& G, int g, const std::vector<int>& members,
    const std::vector<int>& table) {
  size_t n = members.size();
  std::vector<std::pair<int, int>> moved(n);
  for (size_t i = 0; i < n; ++i)
    moved[i] = {G.conj(g, members[i]), table[i]};
  std::sort(moved.begin(), moved.end());
  std::vector<int> m2(n), t2(n);
  for (size_t i = 0; i < n; ++i) {
    m2[i] = moved[i].first;
    t2[i] = moved[i].second;
  }
  return {std::move(m2), std::move(t2)};
}

std::vector<int> target_move(const FiniteGroup& T, int h,
                             const std::vector<int>& table) {
  std::vector<int> t2;
  t2.reserve(table.size());
  for (int v : table) t2.push_back(T.conj(h, v));
  return t2;
}

}  // namespace

BisetPair make_pair(const Subgroup& H, const std::vector<int>& table,
                    const FiniteGroup& target) {
  BisetPair p;
  p.H = H;
  p.phi.source = H;
  p.phi.target = target.full();
  p.phi.table = table;
  p.phi.injective = table_injective(table);
  p.phi.kind = HomKind::general;
  return p;
}

bool pairs_conjugate(const Subgroup& src, const BisetPair& a,
                     const BisetPair& b) {
  if (a.H.ambient != b.H.ambient ||
      a.phi.target.ambient != b.phi.target.ambient)
    throw AmbientMismatch("pairs over different (G, G')");
  if (a.H.order() != b.H.order()) return false;

  const FiniteGroup& G = *a.H.ambient;
  const FiniteGroup& T = *a.phi.target.ambient;
  for (int g : src.members) {
    auto [m2, t2] = source_move(G, g, a.H.members, a.phi.table);
    if (m2 != b.H.members) continue;
    for (int h = 0; h < T.order(); ++h) {
      if (target_move(T, h, t2) == b.phi.table) return true;
    }
  }
  return false;
}

bool pairs_conjugate(const BisetPair& a, const BisetPair& b) {
  return pairs_conjugate(a.H.ambient->full(), a, b);
}

int BurnsideBasis::reduced_rank() const {
  int rank = 0;
  for (bool f : trivial_flags)
    if (!f) ++rank;
  return rank;
}

BurnsideBasis burnside_basis(const Subgroup& src, const FiniteGroup& target,
                             const Caps& caps) {
  const FiniteGroup& G = *src.ambient;
  BurnsideBasis basis;
  basis.source = src;
  basis.target = &target;

  // every pair (H <= src, phi: H -> target)
  std::vector<Subgroup> subs = all_subgroups(src, caps);
  struct Pair {
    int sub;  // index into subs
    std::vector<int> table;
  };
  std::vector<Pair> pairs;
  std::unordered_map<std::vector<int>, int, VecIntHash> id_of;
  Subgroup tfull = target.full();
  for (size_t si = 0; si < subs.size(); ++si) {
    for (const Homomorphism& h : homomorphisms(subs[si], tfull, false, caps)) {
      id_of.emplace(pair_key(subs[si].members, h.table),
                    static_cast<int>(pairs.size()));
      pairs.push_back({static_cast<int>(si), h.table});
    }
  }
  std::unordered_map<std::vector<int>, int, VecIntHash> sub_pos;
  for (size_t si = 0; si < subs.size(); ++si)
    sub_pos.emplace(subs[si].members, static_cast<int>(si));

  // orbit partition under generator moves from both sides
  std::vector<int> src_gens = minimal_generating_sequence(src);
  std::vector<int> tgt_gens = minimal_generating_sequence(target.full());
  std::vector<int> orbit_of(pairs.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t start = 0; start < pairs.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    int oid = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::deque<int> work{static_cast<int>(start)};
    orbit_of[start] = oid;
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      orbits[oid].push_back(cur);
      const Pair& p = pairs[cur];
      const std::vector<int>& mem = subs[p.sub].members;
      auto push = [&](const std::vector<int>& m2, const std::vector<int>& t2) {
        int nid = id_of.at(pair_key(m2, t2));
        if (orbit_of[nid] < 0) {
          orbit_of[nid] = oid;
          work.push_back(nid);
        }
      };
      for (int g : src_gens) {
        auto [m2, t2] = source_move(G, g, mem, p.table);
        push(m2, t2);
      }
      for (int h : tgt_gens) push(mem, target_move(target, h, p.table));
    }
  }

  // canonical representative = minimal key in the orbit; classes ordered by
  // (|H|, members, table)
  struct Rep {
    std::vector<int> key;
    int sub;
    std::vector<int> table;
    int orbit;
  };
  std::vector<Rep> reps;
  for (size_t oid = 0; oid < orbits.size(); ++oid) {
    const Pair* best = nullptr;
    std::vector<int> best_key;
    for (int pid : orbits[oid]) {
      std::vector<int> key = pair_key(subs[pairs[pid].sub].members,
                                      pairs[pid].table);
      if (!best || key < best_key) {
        best = &pairs[pid];
        best_key = std::move(key);
      }
    }
    reps.push_back(Rep{pair_key(subs[best->sub].members, best->table),
                       best->sub, best->table, static_cast<int>(oid)});
  }
  std::sort(reps.begin(), reps.end(), [&](const Rep& a, const Rep& b) {
    size_t oa = subs[a.sub].members.size(), ob = subs[b.sub].members.size();
    if (oa != ob) return oa < ob;
    return a.key < b.key;
  });

  std::vector<int> class_of_orbit(orbits.size());
  for (size_t c = 0; c < reps.size(); ++c) {
    class_of_orbit[reps[c].orbit] = static_cast<int>(c);
    basis.classes.push_back(make_pair(subs[reps[c].sub], reps[c].table, target));
    bool trivial = true;
    for (int v : reps[c].table)
      if (v != target.identity_index()) trivial = false;
    basis.trivial_flags.push_back(trivial);
  }
  for (size_t pid = 0; pid < pairs.size(); ++pid)
    basis.class_of_.emplace(
        pair_key(subs[pairs[pid].sub].members, pairs[pid].table),
        class_of_orbit[orbit_of[pid]]);
  return basis;
}

BurnsideBasis burnside_basis(const FiniteGroup& G, const FiniteGroup& G2,
                             const Caps& caps) {
  return burnside_basis(G.full(), G2, caps);
}

int canonical_class(const BisetPair& pair, const BurnsideBasis& basis) {
  if (pair.H.ambient != basis.source.ambient ||
      pair.phi.target.ambient != basis.target)
    throw AmbientMismatch("pair does not live over the basis (G, G')");
  auto it = basis.class_of_.find(pair_key(pair.H.members, pair.phi.table));
  if (it == basis.class_of_.end())
    throw NotFound("pair missing from basis; basis construction is broken");
  return it->second;
}

ExplicitBiset realize_biset(const Subgroup& src, const BisetPair& pair,
                            const Caps& caps) {
  const FiniteGroup& G = *src.ambient;
  const FiniteGroup& T = *pair.phi.target.ambient;
  int n = src.order();
  int nt = T.order();
  int hh = pair.H.order();
  if (static_cast<long long>(n) * nt / hh > caps.max_biset)
    throw CapExceeded("biset larger than max_biset");

  // classes of (x, y) under (x, y) ~ (x·phi(g), g⁻¹·y) for g in H; the class
  // of (x, y) is a single H-sweep
  std::vector<int> class_of(static_cast<size_t>(nt) * n, -1);
  auto slot = [&](int x, int ypos) { return static_cast<size_t>(x) * n + ypos; };
  ExplicitBiset bs;
  for (int x = 0; x < nt; ++x) {
    for (int ypos = 0; ypos < n; ++ypos) {
      if (class_of[slot(x, ypos)] >= 0) continue;
      int cid = bs.size++;
      std::pair<int, int> rep{x, src.members[ypos]};
      for (size_t i = 0; i < pair.H.members.size(); ++i) {
        int g = pair.H.members[i];
        int x2 = T.mul(x, pair.phi.table[i]);
        int y2 = G.mul(G.inv(g), src.members[ypos]);
        int y2pos = src.pos_of(y2);
        if (y2pos < 0) throw Error("biset: source not closed");
        if (class_of[slot(x2, y2pos)] >= 0 &&
            class_of[slot(x2, y2pos)] != cid)
          throw Error("biset: inconsistent H-orbit");
        class_of[slot(x2, y2pos)] = cid;
        rep = std::min(rep, {x2, y2});
      }
      bs.reps.push_back(rep);
    }
  }
  if (bs.size != n * nt / hh) throw Error("biset: cardinality mismatch");

  bs.left_action.assign(nt, std::vector<int>(bs.size));
  for (int x2 = 0; x2 < nt; ++x2)
    for (int c = 0; c < bs.size; ++c) {
      int x = bs.reps[c].first;
      int ypos = src.pos_of(bs.reps[c].second);
      bs.left_action[x2][c] = class_of[slot(T.mul(x2, x), ypos)];
    }
  bs.right_action.assign(n, std::vector<int>(bs.size));
  for (int gpos = 0; gpos < n; ++gpos)
    for (int c = 0; c < bs.size; ++c) {
      int x = bs.reps[c].first;
      int y = bs.reps[c].second;
      int y2pos = src.pos_of(G.mul(y, src.members[gpos]));
      bs.right_action[gpos][c] = class_of[slot(x, y2pos)];
    }
  return bs;
}

BurnsideElement zero_element(const BurnsideBasis& basis) {
  return BurnsideElement{&basis,
                         std::vector<long long>(basis.num_classes(), 0)};
}

BurnsideElement basis_element(const BurnsideBasis& basis, int cls) {
  BurnsideElement e = zero_element(basis);
  e.coeffs.at(cls) = 1;
  return e;
}

BurnsideElement element_add(const BurnsideElement& a,
                            const BurnsideElement& b) {
  if (a.basis != b.basis)
    throw BasisMismatch("elements over different bases");
  BurnsideElement r{a.basis, a.coeffs};
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

bool element_equal(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.basis != b.basis)
    throw BasisMismatch("elements over different bases");
  return a.coeffs == b.coeffs;
}

bool element_equal_reduced(const BurnsideElement& a,
                           const BurnsideElement& b) {
  if (a.basis != b.basis)
    throw BasisMismatch("elements over different bases");
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (!a.basis->trivial_flags[i] && a.coeffs[i] != b.coeffs[i]) return false;
  return true;
}

bool stable_inclusion_equal(const BurnsideBasis& basisPG, const Subgroup& P,
                            const Subgroup& Q, const Homomorphism& phi) {
  if (!(basisPG.source == P))
    throw AmbientMismatch("basis source is not P");
  if (phi.source.members != P.members || phi.target.ambient != P.ambient ||
      Q.ambient != P.ambient)
    throw AmbientMismatch("phi must map P into a subgroup of the same group");
  // [P, iota_Q ∘ phi]: same table, target widened to the full group
  BisetPair composed = make_pair(P, phi.table, *basisPG.target);
  BisetPair included = make_pair(P, P.members, *basisPG.target);
  return canonical_class(composed, basisPG) ==
         canonical_class(included, basisPG);
}

bool stable_inclusion_equal(const FiniteGroup& G, const Subgroup& S,
                            const Subgroup& P, const Subgroup& Q,
                            const Homomorphism& phi, const Caps& caps) {
  if (S.ambient != &G || P.ambient != &G || Q.ambient != &G)
    throw AmbientMismatch("P, Q, S must be subgroups of G");
  for (int m : P.members)
    if (!S.contains(m)) throw AmbientMismatch("P not contained in S");
  for (int m : Q.members)
    if (!S.contains(m)) throw AmbientMismatch("Q not contained in S");
  BurnsideBasis basis = burnside_basis(P, G, caps);
  return stable_inclusion_equal(basis, P, Q, phi);
}

}  // namespace bclass
