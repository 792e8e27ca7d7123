#include "bclass/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bclass {

int FusionSystem::object_index(const std::vector<int>& members) const {
  auto it = object_index_.find(members);
  if (it == object_index_.end()) return -1;
  return it->second;
}

bool FusionSystem::contains(int from, int to,
                            const std::vector<int>& table) const {
  const auto& hs = homs(from, to);
  auto it = std::lower_bound(hs.begin(), hs.end(), table,
                             [](const Homomorphism& h, const std::vector<int>& t) {
                               return h.table < t;
                             });
  return it != hs.end() && it->table == table;
}

std::vector<Homomorphism> fusion_hom_set(const FiniteGroup& G,
                                         const Subgroup& P, const Subgroup& Q) {
  if (P.ambient != &G || Q.ambient != &G)
    throw AmbientMismatch("fusion_hom_set requires subgroups of G");
  std::set<std::vector<int>> tables;
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> table;
    table.reserve(P.members.size());
    bool lands = true;
    for (int m : P.members) {
      int im = G.conj(g, m);
      if (!Q.contains(im)) {
        lands = false;
        break;
      }
      table.push_back(im);
    }
    if (lands) tables.insert(std::move(table));
  }
  std::vector<Homomorphism> out;
  out.reserve(tables.size());
  for (const auto& t : tables) {
    Homomorphism h;
    h.source = P;
    h.target = Q;
    h.table = t;
    h.injective = true;
    h.kind = HomKind::conjugation;
    out.push_back(std::move(h));
  }
  return out;  // set iteration is already sorted by table
}

FusionSystem build_fusion_system_on(const FiniteGroup& G, const Subgroup& S,
                                    int p, const Caps& caps) {
  if (S.ambient != &G)
    throw AmbientMismatch("Sylow subgroup belongs to a different group");
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  FusionSystem F;
  F.prime = p;
  F.ambient = &G;
  F.ambient_label = G.name();
  F.base = S;
  F.objects = all_subgroups(S, caps);
  int n = F.num_objects();
  for (int i = 0; i < n; ++i) F.object_index_.emplace(F.objects[i].members, i);
  F.hom_table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      F.hom_table[i * n + j] = fusion_hom_set(G, F.objects[i], F.objects[j]);
  return F;
}

FusionSystem build_fusion_system(const FiniteGroup& G, int p,
                                 const Caps& caps) {
  // If p does not divide |G| this is the fusion system on the trivial
  // subgroup: one object, one morphism.
  return build_fusion_system_on(G, sylow_subgroup(G, p), p, caps);
}

void check_fusion_axioms(const FusionSystem& F) {
  const FiniteGroup& G = *F.ambient;
  int n = F.num_objects();

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const Homomorphism& h : F.homs(i, j)) {
        if (!table_injective(h.table))
          throw Error("fusion axiom: non-injective morphism");
        if (!is_multiplicative(h))
          throw Error("fusion axiom: morphism not multiplicative");
      }
    }
  }

  // S-fusion containment
  for (int g : F.base.members) {
    for (int i = 0; i < n; ++i) {
      const Subgroup& P = F.objects[i];
      std::vector<int> conj;
      conj.reserve(P.members.size());
      for (int m : P.members) conj.push_back(G.conj(g, m));
      for (int j = 0; j < n; ++j) {
        const Subgroup& Q = F.objects[j];
        bool lands = true;
        for (int im : conj)
          if (!Q.contains(im)) {
            lands = false;
            break;
          }
        if (lands && !F.contains(i, j, conj))
          throw Error("fusion axiom: missing S-conjugation morphism");
      }
    }
  }

  // composition closure
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const Homomorphism& phi : F.homs(i, j))
        for (int k = 0; k < n; ++k)
          for (const Homomorphism& psi : F.homs(j, k)) {
            Homomorphism comp = compose_homs(psi, phi);
            if (!F.contains(i, k, comp.table))
              throw Error("fusion axiom: composition escapes the system");
          }

  // restriction closure
  for (int i = 0; i < n; ++i) {
    for (int i2 = 0; i2 < n; ++i2) {
      const Subgroup& P2 = F.objects[i2];
      bool inside = true;
      for (int m : P2.members)
        if (!F.objects[i].contains(m)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      for (int j = 0; j < n; ++j)
        for (const Homomorphism& phi : F.homs(i, j)) {
          Homomorphism r = restrict_hom(phi, P2);
          if (!F.contains(i2, j, r.table))
            throw Error("fusion axiom: restriction escapes the system");
        }
    }
  }
}

namespace {

// gamma-image of an object, as a sorted member list
std::vector<int> map_members(const Homomorphism& gamma,
                             const std::vector<int>& members) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(gamma.image_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that transporting every F1-morphism through gamma lands in F2.
bool transports_into(const Homomorphism& gamma, const Homomorphism& gamma_inv,
                     const FusionSystem& F1, const FusionSystem& F2) {
  int n = F1.num_objects();
  for (int i = 0; i < n; ++i) {
    std::vector<int> im_i = map_members(gamma, F1.objects[i].members);
    int i2 = F2.object_index(im_i);
    if (i2 < 0) return false;
    for (int j = 0; j < n; ++j) {
      std::vector<int> im_j = map_members(gamma, F1.objects[j].members);
      int j2 = F2.object_index(im_j);
      if (j2 < 0) return false;
      for (const Homomorphism& phi : F1.homs(i, j)) {
        // psi(x) = gamma(phi(gamma⁻¹(x))) over the sorted image members
        std::vector<int> table;
        table.reserve(im_i.size());
        for (int x : im_i)
          table.push_back(gamma.image_of(phi.image_of(gamma_inv.image_of(x))));
        if (!F2.contains(i2, j2, table)) return false;
      }
    }
  }
  return true;
}

bool fusion_prefilters_pass(const FusionSystem& F1, const FusionSystem& F2,
                            std::string* why) {
  if (F1.base.order() != F2.base.order()) {
    if (why) *why = "Sylow subgroup orders differ";
    return false;
  }
  auto order_counts = [](const FusionSystem& F) {
    std::map<int, int> c;
    for (const Subgroup& o : F.objects) ++c[o.order()];
    return c;
  };
  if (order_counts(F1) != order_counts(F2)) {
    if (why) *why = "per-order subgroup counts differ";
    return false;
  }
  auto hom_sizes = [](const FusionSystem& F) {
    std::vector<size_t> s;
    for (const auto& hs : F.hom_table) s.push_back(hs.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (hom_sizes(F1) != hom_sizes(F2)) {
    if (why) *why = "multiset of morphism-set sizes differs";
    return false;
  }
  return true;
}

}  // namespace

bool is_fusion_isomorphism(const Homomorphism& gamma, const FusionSystem& F1,
                           const FusionSystem& F2) {
  if (F1.prime != F2.prime)
    throw BaseMismatch("fusion systems at different primes");
  if (!(gamma.source == F1.base))
    throw BaseMismatch("gamma domain is not the base of F1");
  std::vector<int> image(gamma.table);
  std::sort(image.begin(), image.end());
  if (gamma.target.ambient != F2.base.ambient || image != F2.base.members)
    throw BaseMismatch("gamma image is not the base of F2");
  if (!table_injective(gamma.table)) return false;

  Homomorphism g = gamma;
  g.target = F2.base;
  Homomorphism ginv = invert_isomorphism(g);
  return transports_into(g, ginv, F1, F2) && transports_into(ginv, g, F2, F1);
}

std::optional<FusionIsomorphism> find_fusion_isomorphism(
    const FusionSystem& F1, const FusionSystem& F2, const Caps& caps) {
  if (F1.prime != F2.prime)
    throw BaseMismatch("fusion systems at different primes");
  if (!fusion_prefilters_pass(F1, F2, nullptr)) return std::nullopt;

  std::optional<FusionIsomorphism> found;
  enumerate_homomorphisms(
      F1.base, F2.base, true, caps, [&](const Homomorphism& h) {
        Homomorphism gamma = h;  // injective with |S| = |S'|, so bijective
        gamma.kind = HomKind::isomorphism;
        if (is_fusion_isomorphism(gamma, F1, F2)) {
          found = FusionIsomorphism{gamma, &F1, &F2};
          return false;  // stop at the first verified witness
        }
        return true;
      });
  return found;
}

std::string fusion_mismatch_detail(const FusionSystem& F1,
                                   const FusionSystem& F2, const Caps& caps) {
  std::string why;
  if (!fusion_prefilters_pass(F1, F2, &why)) return why;
  int tried = 0;
  enumerate_homomorphisms(F1.base, F2.base, true, caps,
                          [&](const Homomorphism&) {
                            ++tried;
                            return true;
                          });
  std::ostringstream os;
  os << "no isomorphism transports the morphism tables (exhausted " << tried
     << " candidate isomorphisms)";
  return os.str();
}

}  // namespace bclass
