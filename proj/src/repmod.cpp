#include "bclass/repmod.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace bclass {

int RepSet::class_of_table(const std::vector<int>& table) const {
  auto it = class_of_.find(table);
  if (it == class_of_.end())
    throw NotFound("homomorphism table missing from Rep set");
  return it->second;
}

int RepSet::act_on_class(const Homomorphism& alpha, int cls) const {
  // class(rho ∘ alpha⁻¹); sources are full subgroups, so member positions
  // coincide with element indices
  Homomorphism ainv = invert_isomorphism(alpha);
  const std::vector<int>& rho = classes[cls].table;
  std::vector<int> table(rho.size());
  for (size_t x = 0; x < table.size(); ++x)
    table[x] = rho[ainv.table[x]];
  return class_of_table(table);
}

const std::vector<int>& RepSet::action_of(int out_index) const {
  auto it = action_cache_.find(out_index);
  if (it != action_cache_.end()) return it->second;
  std::vector<int> perm(classes.size());
  for (int c = 0; c < num_classes(); ++c)
    perm[c] = act_on_class(auts.out_reps[out_index], c);
  return action_cache_.emplace(out_index, std::move(perm)).first->second;
}

RepSet rep_set(const FiniteGroup& Q, const FiniteGroup& G, bool injective_only,
               const Caps& caps) {
  RepSet X;
  X.Q = &Q;
  X.G = &G;
  X.injective_only = injective_only;
  X.auts = automorphism_classes(Q, caps);

  std::vector<Homomorphism> homs = homomorphisms(Q, G, injective_only, caps);
  std::unordered_map<std::vector<int>, int, VecIntHash> id_of;
  for (size_t i = 0; i < homs.size(); ++i) id_of.emplace(homs[i].table, i);

  // orbits under postcomposition with conjugations of G
  std::vector<int> gens = minimal_generating_sequence(G.full());
  std::vector<int> orbit_of(homs.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t start = 0; start < homs.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    int oid = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::deque<int> work{static_cast<int>(start)};
    orbit_of[start] = oid;
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      orbits[oid].push_back(cur);
      for (int h : gens) {
        std::vector<int> t2;
        t2.reserve(homs[cur].table.size());
        for (int v : homs[cur].table) t2.push_back(G.conj(h, v));
        int nid = id_of.at(t2);
        if (orbit_of[nid] < 0) {
          orbit_of[nid] = oid;
          work.push_back(nid);
        }
      }
    }
  }

  // canonical representative: minimal table in the orbit
  std::vector<int> reps;
  for (const auto& orb : orbits) {
    int best = orb.front();
    for (int i : orb)
      if (homs[i].table < homs[best].table) best = i;
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(),
            [&](int a, int b) { return homs[a].table < homs[b].table; });
  std::vector<int> class_of_orbit(orbits.size());
  for (size_t c = 0; c < reps.size(); ++c) {
    X.classes.push_back(homs[reps[c]]);
    class_of_orbit[orbit_of[reps[c]]] = static_cast<int>(c);
  }
  for (size_t i = 0; i < homs.size(); ++i)
    X.class_of_.emplace(homs[i].table, class_of_orbit[orbit_of[i]]);
  return X;
}

MatrixModuleFp linearize(const RepSet& X, int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  MatrixModuleFp M;
  M.p = p;
  M.dim = X.num_classes();
  for (int k = 0; k < X.num_out(); ++k) {
    M.acting_generators.push_back("o" + std::to_string(k));
    FpMatrix mat = FpMatrix::zero(p, M.dim, M.dim);
    const std::vector<int>& perm = X.action_of(k);
    for (int c = 0; c < M.dim; ++c) mat.at(perm[c], c) = 1;
    M.matrices.push_back(std::move(mat));
  }
  return M;
}

namespace {

bool is_perm_matrix(const FpMatrix& m, std::vector<int>& perm) {
  if (m.rows != m.cols) return false;
  perm.assign(m.cols, -1);
  std::vector<char> row_used(m.rows, 0);
  for (int c = 0; c < m.cols; ++c) {
    for (int r = 0; r < m.rows; ++r) {
      if (!m.at(r, c)) continue;
      if (m.at(r, c) != 1 || perm[c] >= 0 || row_used[r]) return false;
      perm[c] = r;
      row_used[r] = 1;
    }
    if (perm[c] < 0) return false;
  }
  return true;
}

std::vector<int> perm_compose(const std::vector<int>& a,
                              const std::vector<int>& b) {
  // matrix product A*B corresponds to a ∘ b on basis indices
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

int fix_count(const std::vector<int>& perm) {
  int f = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == static_cast<int>(i)) ++f;
  return f;
}

constexpr size_t kJointBound = 20000;
constexpr int kRandomTries = 20000;

// Group generated by pairs of permutations, as pairs. Returns false if the
// closure exceeds kJointBound.
bool joint_closure(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& gens,
                   int dim,
                   std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
  std::vector<int> id(dim);
  for (int i = 0; i < dim; ++i) id[i] = i;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::deque<std::pair<std::vector<int>, std::vector<int>>> work;
  seen.emplace(id, id);
  work.emplace_back(id, id);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      std::pair<std::vector<int>, std::vector<int>> next{
          perm_compose(cur.first, g.first), perm_compose(cur.second, g.second)};
      if (seen.insert(next).second) {
        if (seen.size() > kJointBound) return false;
        work.push_back(std::move(next));
      }
    }
  }
  out.assign(seen.begin(), seen.end());
  return true;
}

}  // namespace

bool modules_isomorphic(const MatrixModuleFp& M, const MatrixModuleFp& N,
                        uint64_t seed) {
  if (M.p != N.p) throw FieldMismatch("modules over different prime fields");
  if (M.acting_generators != N.acting_generators)
    throw ActionMismatch("modules over different acting generators");
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  int d = M.dim;
  int p = M.p;
  size_t gens = M.matrices.size();
  if (gens == 0) return true;  // no constraints: equal dimensions suffice

  // Permutation-module route: compare integral permutation characters on
  // the group generated by the matrix pairs. Conclusive when that group is
  // away from the modular case.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pair_gens;
  bool all_perm = true;
  for (size_t k = 0; k < gens && all_perm; ++k) {
    std::vector<int> pa, pb;
    if (is_perm_matrix(M.matrices[k], pa) && is_perm_matrix(N.matrices[k], pb))
      pair_gens.emplace_back(std::move(pa), std::move(pb));
    else
      all_perm = false;
  }

  // Index set generating the same pair group as all labels; shrinks the
  // linear system when the label list enumerates a whole acting group.
  std::vector<size_t> system_gens;
  for (size_t k = 0; k < gens; ++k) system_gens.push_back(k);

  if (all_perm) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> joint;
    if (joint_closure(pair_gens, d, joint)) {
      if (joint.size() % p != 0) {
        for (const auto& [a, b] : joint)
          if (fix_count(a) != fix_count(b)) return false;
        return true;  // semisimple: equal characters decide
      }
      // greedy generating subset for the intertwiner system
      std::set<std::pair<std::vector<int>, std::vector<int>>> closed;
      std::vector<int> id(d);
      for (int i = 0; i < d; ++i) id[i] = i;
      closed.emplace(id, id);
      system_gens.clear();
      std::vector<std::pair<std::vector<int>, std::vector<int>>> chosen;
      for (size_t k = 0; k < gens; ++k) {
        if (closed.count(pair_gens[k])) continue;
        system_gens.push_back(k);
        chosen.push_back(pair_gens[k]);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> sub;
        joint_closure(chosen, d, sub);
        closed.clear();
        closed.insert(sub.begin(), sub.end());
      }
    }
  }

  // rank profile of powers of (rho(g) - 1): invariant under conjugation by
  // an intertwiner, so a mismatch settles non-isomorphism without touching
  // the intertwiner space
  for (size_t k : system_gens) {
    FpMatrix am = M.matrices[k];
    FpMatrix bm = N.matrices[k];
    for (int i = 0; i < d; ++i) {
      am.at(i, i) = static_cast<uint8_t>((am.at(i, i) + p - 1) % p);
      bm.at(i, i) = static_cast<uint8_t>((bm.at(i, i) + p - 1) % p);
    }
    FpMatrix ap = am, bp = bm;
    for (int j = 1; j <= d; ++j) {
      int ra = fp_rank(ap), rb = fp_rank(bp);
      if (ra != rb) return false;
      if (ra == 0) break;
      ap = fp_mul(ap, am);
      bp = fp_mul(bp, bm);
    }
  }

  // intertwiner space: solutions T of T·A_k = B_k·T for generating k
  FpMatrix sys = FpMatrix::zero(
      p, static_cast<int>(system_gens.size()) * d * d, d * d);
  int row = 0;
  for (size_t k : system_gens) {
    const FpMatrix& A = M.matrices[k];
    const FpMatrix& B = N.matrices[k];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        // coefficient of T[u][v]: [u==r]·A[v][c] − B[r][u]·[v==c]
        for (int v = 0; v < d; ++v)
          sys.at(row, r * d + v) =
              static_cast<uint8_t>((sys.at(row, r * d + v) + A.at(v, c)) % p);
        for (int u = 0; u < d; ++u)
          sys.at(row, u * d + c) = static_cast<uint8_t>(
              (sys.at(row, u * d + c) + p - B.at(r, u) % p) % p);
        ++row;
      }
  }
  std::vector<std::vector<uint8_t>> space = fp_nullspace(std::move(sys));
  size_t k = space.size();
  if (k == 0) return false;

  auto combine = [&](const std::vector<int>& coeffs) {
    FpMatrix T = FpMatrix::zero(p, d, d);
    for (size_t i = 0; i < k; ++i) {
      if (!coeffs[i]) continue;
      for (int e = 0; e < d * d; ++e)
        T.a[e] = static_cast<uint8_t>((T.a[e] + coeffs[i] * space[i][e]) % p);
    }
    return T;
  };

  // projective count (p^k - 1)/(p - 1), clamped
  double proj = 0;
  {
    double pw = 1;
    for (size_t i = 0; i < k; ++i) {
      proj += pw;
      pw *= p;
      if (proj > (1 << 20)) break;
    }
  }

  auto exhaustive = [&]() {
    // leading coefficient normalized to 1: T invertible iff c·T invertible
    std::vector<int> coeffs(k, 0);
    for (size_t lead = 0; lead < k; ++lead) {
      std::fill(coeffs.begin(), coeffs.end(), 0);
      coeffs[lead] = 1;
      while (true) {
        if (fp_invertible(combine(coeffs))) return true;
        size_t pos = lead + 1;
        while (pos < k && coeffs[pos] == p - 1) coeffs[pos++] = 0;
        if (pos >= k) break;
        ++coeffs[pos];
      }
    }
    return false;
  };

  if (proj <= static_cast<double>(1 << 20)) return exhaustive();

  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRandomTries; ++t) {
    std::vector<int> coeffs(k);
    bool nonzero = false;
    for (size_t i = 0; i < k; ++i) {
      coeffs[i] = static_cast<int>(rng() % p);
      nonzero |= coeffs[i] != 0;
    }
    if (nonzero && fp_invertible(combine(coeffs))) return true;
  }
  return exhaustive();  // hard fallback, exact
}

namespace {

// Out-group arithmetic on coset indices, via composition of representatives.
struct OutGroup {
  const RepSet* X;
  int size() const { return X->num_out(); }
  int mul(int i, int j) const {
    Homomorphism comp =
        compose_homs(X->auts.out_reps[i], X->auts.out_reps[j]);
    int ai = X->auts.aut_index_of(comp.table);
    return X->auts.coset_of[ai];
  }
  int inv(int i) const {
    Homomorphism iv = invert_isomorphism(X->auts.out_reps[i]);
    int ai = X->auts.aut_index_of(iv.table);
    return X->auts.coset_of[ai];
  }
  // small generating set, greedy
  std::vector<int> generators() const {
    std::vector<int> gens;
    std::vector<char> closed(size(), 0);
    closed[0] = 1;  // identity coset: representatives sort identity first
    int closed_count = 1;
    for (int k = 1; k < size(); ++k) {
      if (closed[k]) continue;
      gens.push_back(k);
      // close under multiplication by the new generator
      std::deque<int> work;
      for (int i = 0; i < size(); ++i)
        if (closed[i]) work.push_back(i);
      while (!work.empty()) {
        int cur = work.front();
        work.pop_front();
        for (int g : gens) {
          for (int next : {mul(cur, g), mul(g, cur)}) {
            if (!closed[next]) {
              closed[next] = 1;
              ++closed_count;
              work.push_back(next);
            }
          }
        }
      }
      if (closed_count == size()) break;
    }
    return gens;
  }
};

struct OrbitInfo {
  int size;
  std::vector<int> stabilizer;  // sorted out indices
};

std::vector<OrbitInfo> orbit_infos(const RepSet& X, const OutGroup& out,
                                   const std::vector<int>& gens) {
  int n = X.num_classes();
  std::vector<int> orbit_of(n, -1);
  std::vector<OrbitInfo> infos;
  for (int c = 0; c < n; ++c) {
    if (orbit_of[c] >= 0) continue;
    int oid = static_cast<int>(infos.size());
    std::deque<int> work{c};
    orbit_of[c] = oid;
    int count = 0;
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      ++count;
      for (int g : gens) {
        int next = X.act_on_class(X.auts.out_reps[g], cur);
        if (orbit_of[next] < 0) {
          orbit_of[next] = oid;
          work.push_back(next);
        }
      }
    }
    OrbitInfo info;
    info.size = count;
    for (int k = 0; k < out.size(); ++k)
      if (X.act_on_class(X.auts.out_reps[k], c) == c)
        info.stabilizer.push_back(k);
    infos.push_back(std::move(info));
  }
  return infos;
}

bool stabilizers_conjugate(const OutGroup& out, const std::vector<int>& s1,
                           const std::vector<int>& s2) {
  if (s1.size() != s2.size()) return false;
  if (s1 == s2) return true;
  for (int t = 0; t < out.size(); ++t) {
    int tinv = out.inv(t);
    std::vector<int> conj;
    conj.reserve(s1.size());
    for (int s : s1) conj.push_back(out.mul(out.mul(t, s), tinv));
    std::sort(conj.begin(), conj.end());
    if (conj == s2) return true;
  }
  return false;
}

}  // namespace

bool out_sets_isomorphic(const RepSet& X, const RepSet& Y) {
  bool same_q = X.Q == Y.Q || X.Q->elements() == Y.Q->elements();
  if (!same_q) throw QMismatch("Rep sets over different groups Q");
  if (X.num_classes() != Y.num_classes()) return false;
  if (X.num_classes() == 0) return true;

  // identical inputs produce identical Rep sets
  if (X.injective_only == Y.injective_only &&
      (X.G == Y.G || X.G->elements() == Y.G->elements())) {
    bool same = true;
    for (int c = 0; c < X.num_classes() && same; ++c)
      same = X.classes[c].table == Y.classes[c].table;
    if (same) return true;
  }

  OutGroup out{&X};
  std::vector<int> gens = out.generators();
  std::vector<OrbitInfo> ox = orbit_infos(X, out, gens);
  std::vector<OrbitInfo> oy = orbit_infos(Y, out, gens);
  if (ox.size() != oy.size()) return false;

  std::vector<char> used(oy.size(), 0);
  for (const OrbitInfo& a : ox) {
    bool matched = false;
    for (size_t j = 0; j < oy.size() && !matched; ++j) {
      if (used[j] || oy[j].size != a.size) continue;
      if (stabilizers_conjugate(out, a.stabilizer, oy[j].stabilizer)) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace bclass
