#include "bclass/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bclass {

bool Subgroup::contains(int elem) const {
  return std::binary_search(members.begin(), members.end(), elem);
}

int Subgroup::pos_of(int elem) const {
  auto it = std::lower_bound(members.begin(), members.end(), elem);
  if (it == members.end() || *it != elem) return -1;
  return static_cast<int>(it - members.begin());
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.ambient == b.ambient && a.members == b.members;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

FiniteGroup::FiniteGroup(std::string name, int degree,
                         std::vector<Perm> generators,
                         std::vector<Perm> elements)
    : name_(std::move(name)),
      degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {
  if (degree_ < 1) throw InvalidArgument("degree must be positive");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (elements_.empty() || !elements_[0].is_identity())
    throw InvalidArgument("element set must contain the identity");
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < order(); ++i) {
    if (elements_[i].degree() != degree_)
      throw DegreeMismatch("element degree disagrees with group degree");
    index_.emplace(elements_[i], i);
  }
  for (const Perm& g : generators_)
    if (index_.find(g) == index_.end())
      throw InvalidArgument("generator not contained in element set");

  int n = order();
  if (n <= 512) {
    mul_table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mul_table_[a * n + b] = index_of_unchecked(elements_[a] * elements_[b]);
  }
  inv_.resize(n);
  element_order_.resize(n);
  for (int a = 0; a < n; ++a) {
    inv_[a] = index_of_unchecked(elements_[a].inverse());
    element_order_[a] = elements_[a].order();
  }
}

FiniteGroup FiniteGroup::closure(std::string name, int degree,
                                 std::vector<Perm> generators,
                                 const Caps& caps) {
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree disagrees in closure of " + name);

  std::unordered_map<Perm, int, PermHash> seen;
  std::deque<Perm> work;
  Perm id = Perm::identity(degree);
  seen.emplace(id, 0);
  work.push_back(id);
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop_front();
    for (const Perm& g : generators) {
      Perm next = cur * g;
      if (seen.emplace(next, 0).second) {
        if (static_cast<int>(seen.size()) > caps.max_order)
          throw CapExceeded("closure of " + name + " exceeds max_order " +
                            std::to_string(caps.max_order));
        work.push_back(std::move(next));
      }
    }
  }
  std::vector<Perm> elements;
  elements.reserve(seen.size());
  for (const auto& [p, _] : seen) elements.push_back(p);
  return FiniteGroup(std::move(name), degree, std::move(generators),
                     std::move(elements));
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return -1;
  return it->second;
}

int FiniteGroup::index_of_unchecked(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error("element set of " + name_ + " is not closed");
  return it->second;
}

Subgroup FiniteGroup::full() const {
  Subgroup s;
  s.ambient = this;
  s.members.resize(order());
  for (int i = 0; i < order(); ++i) s.members[i] = i;
  return s;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int p_part(int n, int p) {
  int m = 1;
  while (n % p == 0) {
    n /= p;
    m *= p;
  }
  return m;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {G.identity_index()}};
}

bool is_subgroup(const Subgroup& H) {
  const FiniteGroup& G = *H.ambient;
  if (!H.contains(G.identity_index())) return false;
  for (int a : H.members) {
    if (!H.contains(G.inv(a))) return false;
    for (int b : H.members)
      if (!H.contains(G.mul(a, b))) return false;
  }
  return true;
}

namespace {

// Closure of `closed` (already a subgroup, sorted) together with one new
// element. Worklist closure: every new element is multiplied against all
// current members, both orders.
std::vector<int> extend_closed(const FiniteGroup& G,
                               const std::vector<int>& closed, int g) {
  std::vector<char> in(G.order(), 0);
  for (int m : closed) in[m] = 1;
  std::vector<int> members(closed);
  std::vector<int> work;
  if (!in[g]) {
    in[g] = 1;
    members.push_back(g);
    work.push_back(g);
  }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int z : {G.mul(x, y), G.mul(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed) {
  std::vector<int> members{G.identity_index()};
  for (int g : seed) {
    if (g < 0 || g >= G.order())
      throw ElementNotInAmbient("seed element index out of range");
    members = extend_closed(G, members, g);
  }
  return Subgroup{&G, std::move(members)};
}

std::vector<int> minimal_generating_sequence(const Subgroup& H) {
  const FiniteGroup& G = *H.ambient;
  std::vector<int> gens;
  std::vector<int> closed{G.identity_index()};
  for (int m : H.members) {
    if (std::binary_search(closed.begin(), closed.end(), m)) continue;
    gens.push_back(m);
    closed = extend_closed(G, closed, m);
    if (static_cast<int>(closed.size()) == H.order()) break;
  }
  return gens;
}

FiniteGroup as_group(const Subgroup& H, std::string name) {
  const FiniteGroup& G = *H.ambient;
  std::vector<Perm> elements;
  elements.reserve(H.members.size());
  for (int m : H.members) elements.push_back(G.element(m));
  std::vector<Perm> gens;
  for (int g : minimal_generating_sequence(H)) gens.push_back(G.element(g));
  return FiniteGroup(std::move(name), G.degree(), std::move(gens),
                     std::move(elements));
}

Subgroup conjugate_subgroup(int g, const Subgroup& H) {
  const FiniteGroup& G = *H.ambient;
  if (g < 0 || g >= G.order())
    throw ElementNotInAmbient("conjugating element not in ambient group");
  std::vector<int> members;
  members.reserve(H.members.size());
  for (int m : H.members) members.push_back(G.conj(g, m));
  std::sort(members.begin(), members.end());
  return Subgroup{&G, std::move(members)};
}

Subgroup conjugate_subgroup(const Perm& g, const Subgroup& H) {
  int idx = H.ambient->index_of(g);
  if (idx < 0)
    throw ElementNotInAmbient("conjugating element not in ambient group");
  return conjugate_subgroup(idx, H);
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g) {
    bool norm = true;
    for (int m : H.members) {
      if (!H.contains(G.conj(g, m))) {
        norm = false;
        break;
      }
    }
    if (norm) members.push_back(g);
  }
  return Subgroup{&G, std::move(members)};
}

std::vector<Subgroup> all_subgroups(const Subgroup& within, const Caps& caps) {
  const FiniteGroup& G = *within.ambient;
  if (within.order() > caps.max_subgroup_ambient)
    throw CapExceeded("subgroup enumeration ambient exceeds cap " +
                      std::to_string(caps.max_subgroup_ambient));

  // Breadth-first: grow every known subgroup by one new element.
  std::map<std::vector<int>, int> known;
  std::deque<std::vector<int>> queue;
  std::vector<int> triv{G.identity_index()};
  known.emplace(triv, 0);
  queue.push_back(triv);
  while (!queue.empty()) {
    std::vector<int> h = std::move(queue.front());
    queue.pop_front();
    for (int g : within.members) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> k = extend_closed(G, h, g);
      if (known.emplace(k, 0).second) queue.push_back(std::move(k));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& [members, _] : known)
    out.push_back(Subgroup{&G, members});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, const Caps& caps) {
  return all_subgroups(G.full(), caps);
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const FiniteGroup& G,
                                                      const Caps& caps) {
  std::vector<Subgroup> subs = all_subgroups(G, caps);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < subs.size(); ++i) pos.emplace(subs[i].members, i);

  std::vector<int> gens = minimal_generating_sequence(G.full());
  std::vector<char> visited(subs.size(), 0);
  std::vector<SubgroupClass> classes;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (visited[i]) continue;
    // orbit under conjugation by generators
    std::vector<int> orbit{static_cast<int>(i)};
    visited[i] = 1;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int g : gens) {
        Subgroup c = conjugate_subgroup(g, subs[orbit[k]]);
        int j = pos.at(c.members);
        if (!visited[j]) {
          visited[j] = 1;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    SubgroupClass cls;
    cls.representative = subs[orbit[0]];
    for (int j : orbit) cls.members.push_back(subs[j]);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              return subgroup_less(a.representative, b.representative);
            });
  return classes;
}

namespace {

Subgroup sylow_impl(const FiniteGroup& G, int p, std::mt19937* rng) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  int target = p_part(G.order(), p);
  if (target == 1) return trivial_subgroup(G);

  // seed: an element of order p, obtained as a power of any element whose
  // order is divisible by p
  std::vector<int> seeds;
  for (int g = 1; g < G.order(); ++g) {
    int ord = G.element_order(g);
    if (ord % p != 0) continue;
    int x = g;
    for (int i = 1; i < ord / p; ++i) x = G.mul(x, g);
    seeds.push_back(x);
    if (!rng) break;  // deterministic: first in canonical order
  }
  int start = seeds.front();
  if (rng) start = seeds[(*rng)() % seeds.size()];

  Subgroup P = subgroup_closure(G, {start});
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    // a p-element of N outside P; its closure with P is again a p-group
    std::vector<int> extensions;
    for (int y : N.members) {
      if (P.contains(y)) continue;
      int ord = G.element_order(y);
      int q = p_part(ord, p);
      if (q == 1) continue;
      int z = y;
      for (int i = 1; i < ord / q; ++i) z = G.mul(z, y);
      if (P.contains(z)) continue;
      extensions.push_back(z);
      if (!rng) break;
    }
    if (extensions.empty())
      throw Error("normalizer ascent stalled; group data corrupt");
    int z = extensions.front();
    if (rng) z = extensions[(*rng)() % extensions.size()];
    std::vector<int> seed(P.members);
    seed.push_back(z);
    P = subgroup_closure(G, seed);
  }
  return P;
}

}  // namespace

Subgroup sylow_subgroup(const FiniteGroup& G, int p) {
  return sylow_impl(G, p, nullptr);
}

Subgroup sylow_subgroup(const FiniteGroup& G, int p, std::mt19937& rng) {
  return sylow_impl(G, p, &rng);
}

}  // namespace bclass
