#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bclass/catalog.hpp"
#include "bclass/group.hpp"
#include "bclass/hom.hpp"

using namespace bclass;

namespace {

FiniteGroup make(const std::string& name, int degree,
                 const std::vector<std::string>& gens) {
  std::vector<Perm> ps;
  for (const auto& g : gens) ps.push_back(parse_cycles(g, degree));
  return FiniteGroup::closure(name, degree, ps);
}

// Oracle: every subgroup generated by at most k elements, by brute force
// over all index tuples. Valid as a full-lattice oracle whenever every
// subgroup of G is k-generated.
std::set<std::vector<int>> subgroups_by_small_generation(const FiniteGroup& G,
                                                         int k) {
  std::set<std::vector<int>> found;
  found.insert({G.identity_index()});
  std::vector<int> idx(k, 0);
  // all non-decreasing tuples of length k
  while (true) {
    std::vector<int> seed(idx.begin(), idx.end());
    found.insert(subgroup_closure(G, seed).members);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == G.order() - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[pos];
  }
  return found;
}

int64_t factorial(int n) {
  int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("perm compose, inverse, order") {
  Perm a = parse_cycles("(0 1 2)", 4);
  Perm b = parse_cycles("(2 3)", 4);
  CHECK((a * a * a).is_identity());
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  // function composition: (a*b)(2) = a(b(2)) = a(3) = 3
  CHECK((a * b)[2] == 3);
  CHECK((b * a)[2] == 0);
}

TEST_CASE("cycle notation round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = 1 + static_cast<int>(rng() % 10);
    std::vector<uint8_t> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p(img);
    CHECK(parse_cycles(to_cycles(p), degree) == p);
  }
  CHECK(to_cycles(Perm::identity(5)) == "()");
  CHECK_THROWS_AS(parse_cycles("(0 9)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 0)", 3), ParseError);
}

TEST_CASE("closure examples") {
  CHECK(make("t", 2, {"(0 1)"}).order() == 2);
  CHECK(make("s3", 3, {"(0 1)", "(0 1 2)"}).order() == 6);
  CHECK(make("d8", 4, {"(0 1 2 3)", "(0 2)"}).order() == 8);

  std::vector<Perm> bad{parse_cycles("(0 1)", 2), parse_cycles("(0 1)", 3)};
  CHECK_THROWS_AS(FiniteGroup::closure("x", 2, bad), DegreeMismatch);

  Caps tight;
  tight.max_order = 5;
  CHECK_THROWS_AS(
      FiniteGroup::closure("s3", 3,
                           {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)},
                           tight),
      CapExceeded);
}

TEST_CASE("closure idempotence and Lagrange bound") {
  Catalog cat = Catalog::builtin();
  for (const auto& e : cat.entries()) {
    const FiniteGroup& G = e.group;
    // closing the element set again adds nothing
    FiniteGroup again = FiniteGroup::closure(
        e.name + "'", G.degree(),
        std::vector<Perm>(G.elements().begin(), G.elements().end()));
    CHECK(again.order() == G.order());
    if (G.degree() <= 12)
      CHECK(factorial(G.degree()) % G.order() == 0);
    // generators are elements
    for (const Perm& g : G.generators()) CHECK(G.index_of(g) >= 0);
    CHECK(G.element(G.identity_index()).is_identity());
  }
}

TEST_CASE("conjugate_subgroup") {
  FiniteGroup s3 = make("S3", 3, {"(0 1)", "(0 1 2)"});
  Subgroup h = subgroup_closure(s3, {s3.index_of(parse_cycles("(0 1)", 3))});

  // identity fixes everything
  CHECK(conjugate_subgroup(s3.identity_index(), h) == h);

  Subgroup expected =
      subgroup_closure(s3, {s3.index_of(parse_cycles("(1 2)", 3))});
  CHECK(conjugate_subgroup(parse_cycles("(0 1 2)", 3), h) == expected);

  // abelian: every conjugate equals H
  FiniteGroup c6 = make("C6", 6, {"(0 1 2 3 4 5)"});
  Subgroup k = subgroup_closure(c6, {c6.index_of(parse_cycles("(0 2 4)(1 3 5)", 6))});
  for (int g = 0; g < c6.order(); ++g)
    CHECK(conjugate_subgroup(g, k) == k);

  FiniteGroup c3 = make("C3", 3, {"(0 1 2)"});
  CHECK_THROWS_AS(conjugate_subgroup(parse_cycles("(0 1)", 3), c3.full()),
                  ElementNotInAmbient);
}

TEST_CASE("all_subgroups counts and oracle") {
  Catalog cat = Catalog::builtin();
  CHECK(all_subgroups(cat.get("C2")).size() == 2);
  CHECK(all_subgroups(cat.get("D8")).size() == 10);
  CHECK(all_subgroups(cat.get("C6")).size() == 4);

  // oracle comparison on groups whose subgroups are all 3-generated
  for (const char* name : {"C2", "C6", "S3", "D8", "C12", "E8", "A4", "D12"}) {
    const FiniteGroup& G = cat.get(name);
    auto expected = subgroups_by_small_generation(G, 3);
    auto got = all_subgroups(G);
    REQUIRE(got.size() == expected.size());
    for (const Subgroup& s : got) {
      CHECK(expected.count(s.members) == 1);
      CHECK(is_subgroup(s));
      CHECK(G.order() % s.order() == 0);
    }
    CHECK(std::is_sorted(got.begin(), got.end(), subgroup_less));
  }

  Caps tight;
  tight.max_subgroup_ambient = 4;
  CHECK_THROWS_AS(all_subgroups(cat.get("S3"), tight), CapExceeded);
}

TEST_CASE("subgroup conjugacy classes") {
  Catalog cat = Catalog::builtin();

  // abelian: all classes singletons
  auto c6cls = subgroup_conjugacy_classes(cat.get("C6"));
  CHECK(c6cls.size() == 4);
  for (const auto& c : c6cls) CHECK(c.members.size() == 1);

  auto s3cls = subgroup_conjugacy_classes(cat.get("S3"));
  CHECK(s3cls.size() == 4);
  std::multiset<int> orders;
  for (const auto& c : s3cls) orders.insert(c.representative.order());
  CHECK(orders == std::multiset<int>{1, 2, 3, 6});

  auto d8cls = subgroup_conjugacy_classes(cat.get("D8"));
  CHECK(d8cls.size() == 8);

  // partition: class sizes sum to the subgroup count, each divides |G|
  for (const char* name : {"S3", "D8", "S4", "A4", "Q8", "D12"}) {
    const FiniteGroup& G = cat.get(name);
    auto classes = subgroup_conjugacy_classes(G);
    size_t total = 0;
    std::set<std::vector<int>> seen;
    for (const auto& c : classes) {
      total += c.members.size();
      CHECK(G.order() % c.members.size() == 0);
      for (const auto& m : c.members) CHECK(seen.insert(m.members).second);
      // representative is minimal in its class
      for (const auto& m : c.members)
        CHECK(!subgroup_less(m, c.representative));
    }
    CHECK(total == all_subgroups(G).size());
  }
}

TEST_CASE("sylow subgroups") {
  Catalog cat = Catalog::builtin();
  CHECK(sylow_subgroup(cat.get("S3"), 2).order() == 2);
  CHECK(sylow_subgroup(cat.get("C6"), 5).order() == 1);

  Subgroup s4syl = sylow_subgroup(cat.get("S4"), 2);
  CHECK(s4syl.order() == 8);
  FiniteGroup s4syl_grp = as_group(s4syl, "syl");
  CHECK(exists_isomorphism(s4syl_grp, cat.get("D8")));

  CHECK_THROWS_AS(sylow_subgroup(cat.get("S3"), 4), InvalidArgument);

  // oracle: maximal p-power-order subgroups from the full lattice
  for (const char* name : {"S3", "S4", "A4", "C12", "D12", "Q8", "E9"}) {
    const FiniteGroup& G = cat.get(name);
    for (int p : {2, 3, 5}) {
      if (!is_prime(p)) continue;
      Subgroup syl = sylow_subgroup(G, p);
      CHECK(syl.order() == p_part(G.order(), p));
      CHECK(is_subgroup(syl));
      int best = 1;
      for (const Subgroup& s : all_subgroups(G))
        if (p_part(s.order(), p) == s.order()) best = std::max(best, s.order());
      CHECK(best == syl.order());
    }
  }
}

TEST_CASE("sylow outputs are conjugate across randomized runs") {
  Catalog cat = Catalog::builtin();
  std::mt19937 rng(99);
  for (const char* name : {"S4", "A4", "S5", "D12"}) {
    const FiniteGroup& G = cat.get(name);
    Subgroup ref = sylow_subgroup(G, 2);
    for (int run = 0; run < 20; ++run) {
      Subgroup s = sylow_subgroup(G, 2, rng);
      CHECK(s.order() == ref.order());
      bool conj = false;
      for (int g = 0; g < G.order() && !conj; ++g)
        conj = conjugate_subgroup(g, s) == ref;
      CHECK(conj);
    }
  }
}

TEST_CASE("as_group preserves structure") {
  Catalog cat = Catalog::builtin();
  const FiniteGroup& s4 = cat.get("S4");
  Subgroup syl = sylow_subgroup(s4, 2);
  FiniteGroup H = as_group(syl, "H");
  CHECK(H.order() == syl.order());
  // element i of H is ambient element syl.members[i]
  for (int i = 0; i < H.order(); ++i)
    CHECK(H.element(i) == s4.element(syl.members[i]));
  // multiplication agrees
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b) {
      int amb = s4.mul(syl.members[a], syl.members[b]);
      CHECK(syl.members[H.mul(a, b)] == amb);
    }
}

TEST_CASE("builtin catalog sanity") {
  Catalog cat = Catalog::builtin();
  std::map<std::string, int> orders{
      {"C1", 1},  {"C7", 7},   {"C12", 12}, {"D8", 8},  {"D16", 16},
      {"Q8", 8},  {"S3", 6},   {"S4", 24},  {"S5", 120}, {"A4", 12},
      {"A5", 60}, {"E4", 4},   {"E8", 8},   {"E9", 9},  {"E27", 27}};
  for (const auto& [name, order] : orders) CHECK(cat.get(name).order() == order);
  CHECK(cat.entries().size() == 27);
  CHECK_THROWS_AS(cat.get("nosuch"), UnknownGroup);

  // Q8 has a unique involution
  const FiniteGroup& q8 = cat.get("Q8");
  int involutions = 0;
  for (int i = 0; i < q8.order(); ++i)
    if (q8.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);
}
