#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bclass/catalog.hpp"
#include "bclass/repmod.hpp"

using namespace bclass;

namespace {

// Oracle: conjugacy classes of homomorphisms by pairwise tests against the
// definition (exists h with rho' = c_h ∘ rho).
int classes_by_pairwise_conjugacy(const FiniteGroup& Q, const FiniteGroup& G,
                                  bool injective_only) {
  auto homs = homomorphisms(Q, G, injective_only);
  std::vector<std::vector<int>> classes;
  for (const auto& rho : homs) {
    bool placed = false;
    for (auto& cls : classes) {
      const std::vector<int>& rep = homs[cls.front()].table;
      for (int h = 0; h < G.order() && !placed; ++h) {
        std::vector<int> conj;
        conj.reserve(rep.size());
        for (int v : rep) conj.push_back(G.conj(h, v));
        placed = conj == rho.table;
      }
      if (placed) {
        cls.push_back(0);
        break;
      }
    }
    if (!placed) classes.push_back({static_cast<int>(&rho - homs.data())});
  }
  return static_cast<int>(classes.size());
}

MatrixModuleFp perm_module(int p, std::vector<std::vector<int>> perms) {
  MatrixModuleFp M;
  M.p = p;
  M.dim = perms.empty() ? 0 : static_cast<int>(perms[0].size());
  for (size_t k = 0; k < perms.size(); ++k) {
    M.acting_generators.push_back("o" + std::to_string(k));
    FpMatrix mat = FpMatrix::zero(p, M.dim, M.dim);
    for (int c = 0; c < M.dim; ++c) mat.at(perms[k][c], c) = 1;
    M.matrices.push_back(std::move(mat));
  }
  return M;
}

}  // namespace

TEST_CASE("fp linear algebra") {
  FpMatrix a = FpMatrix::zero(3, 2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 1) = 1;
  CHECK(fp_invertible(a));
  CHECK(fp_rank(a) == 2);

  FpMatrix b = FpMatrix::zero(3, 2, 2);
  b.at(0, 0) = 1;
  b.at(1, 0) = 2;
  CHECK_FALSE(fp_invertible(b));
  CHECK(fp_rank(b) == 1);
  auto ns = fp_nullspace(b);
  REQUIRE(ns.size() == 1);
  // b * v = 0
  CHECK((b.at(0, 0) * ns[0][0] + b.at(0, 1) * ns[0][1]) % 3 == 0);
  CHECK((b.at(1, 0) * ns[0][0] + b.at(1, 1) * ns[0][1]) % 3 == 0);

  CHECK(fp_mul(a, FpMatrix::identity(3, 2)) == a);
}

TEST_CASE("rep_set class counts") {
  Catalog cat = Catalog::builtin();
  CHECK(rep_set(cat.get("C2"), cat.get("S3"), false).num_classes() == 2);
  CHECK(rep_set(cat.get("C2"), cat.get("S3"), true).num_classes() == 1);
  CHECK(rep_set(cat.get("C3"), cat.get("C2"), true).num_classes() == 0);

  struct Case {
    const char* q;
    const char* g;
  };
  for (Case c : {Case{"C2", "S3"}, Case{"C2", "S4"}, Case{"C3", "A4"},
                 Case{"C4", "D8"}, Case{"E4", "S4"}, Case{"C3", "S5"},
                 Case{"E4", "Q8"}}) {
    const FiniteGroup& Q = cat.get(c.q);
    const FiniteGroup& G = cat.get(c.g);
    for (bool inj : {false, true}) {
      RepSet X = rep_set(Q, G, inj);
      CHECK(X.num_classes() == classes_by_pairwise_conjugacy(Q, G, inj));
      // orbits cover all homomorphisms
      CHECK(X.class_of_.size() == homomorphisms(Q, G, inj).size());
    }
  }
}

TEST_CASE("out action is well defined") {
  Catalog cat = Catalog::builtin();
  struct Case {
    const char* q;
    const char* g;
  };
  for (Case c : {Case{"C3", "S3"}, Case{"C3", "C6"}, Case{"E4", "S4"},
                 Case{"C4", "D8"}, Case{"C2", "S4"}}) {
    RepSet X = rep_set(cat.get(c.q), cat.get(c.g), true);
    // inner automorphisms act as the identity permutation
    for (const Homomorphism& inn : X.auts.inn)
      for (int cls = 0; cls < X.num_classes(); ++cls)
        CHECK(X.act_on_class(inn, cls) == cls);
    // any representative of a coset induces the same permutation
    for (int k = 0; k < X.num_out(); ++k) {
      const std::vector<int>& perm = X.action_of(k);
      for (const Homomorphism& inn : X.auts.inn) {
        Homomorphism alt = compose_homs(X.auts.out_reps[k], inn);
        for (int cls = 0; cls < X.num_classes(); ++cls)
          CHECK(X.act_on_class(alt, cls) == perm[cls]);
      }
      // action permutations are bijections
      std::set<int> img(perm.begin(), perm.end());
      CHECK(img.size() == perm.size());
    }
  }
}

TEST_CASE("linearize") {
  Catalog cat = Catalog::builtin();

  // trivial Out: identity matrices
  RepSet X = rep_set(cat.get("C2"), cat.get("S3"), false);
  REQUIRE(X.num_out() == 1);
  MatrixModuleFp M = linearize(X, 2);
  CHECK(M.dim == 2);
  CHECK(M.matrices[0] == FpMatrix::identity(2, 2));

  // inversion is realized by conjugation in S3: Out(C3) acts trivially
  RepSet Y = rep_set(cat.get("C3"), cat.get("S3"), true);
  MatrixModuleFp MY = linearize(Y, 3);
  CHECK(MY.dim == 1);
  for (const auto& m : MY.matrices) CHECK(m == FpMatrix::identity(3, 1));

  // in C6 inversion is not inner: the two classes get swapped
  RepSet Z = rep_set(cat.get("C3"), cat.get("C6"), true);
  MatrixModuleFp MZ = linearize(Z, 3);
  REQUIRE(MZ.dim == 2);
  bool found_swap = false;
  for (const auto& m : MZ.matrices)
    found_swap |= m.at(0, 1) == 1 && m.at(1, 0) == 1;
  CHECK(found_swap);
}

TEST_CASE("modules_isomorphic") {
  MatrixModuleFp swap2 = perm_module(3, {{0, 1}, {1, 0}});
  MatrixModuleFp triv2 = perm_module(3, {{0, 1}, {0, 1}});
  MatrixModuleFp triv2b = perm_module(3, {{0, 1}, {0, 1}});

  CHECK(modules_isomorphic(swap2, swap2));
  CHECK(modules_isomorphic(triv2, triv2b));
  CHECK_FALSE(modules_isomorphic(swap2, triv2));

  MatrixModuleFp one = perm_module(5, {{0}});
  CHECK(modules_isomorphic(one, one));

  MatrixModuleFp other_p = perm_module(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(modules_isomorphic(swap2, other_p), FieldMismatch);
  MatrixModuleFp other_labels = perm_module(3, {{0, 1}});
  CHECK_THROWS_AS(modules_isomorphic(swap2, other_labels), ActionMismatch);

  // permuting the basis produces an isomorphic module
  MatrixModuleFp m3 = perm_module(3, {{1, 2, 0}, {0, 2, 1}});
  MatrixModuleFp m3p = perm_module(3, {{2, 0, 1}, {1, 0, 2}});  // relabeled
  CHECK(modules_isomorphic(m3, m3p));

  // modular case (p divides the acting group order): regular C2-module over
  // F_2 vs the 2-dimensional trivial module; characters coincide, the
  // intertwiner search must separate them
  MatrixModuleFp reg = perm_module(2, {{1, 0}});
  MatrixModuleFp tr2 = perm_module(2, {{0, 1}});
  CHECK_FALSE(modules_isomorphic(reg, tr2));

  // non-permutation input: unipotent vs identity over F_3 (both order 3 at
  // dim 2 is false; identity vs identity true)
  MatrixModuleFp uni;
  uni.p = 3;
  uni.dim = 2;
  uni.acting_generators = {"o0"};
  FpMatrix u = FpMatrix::identity(3, 2);
  u.at(0, 1) = 1;
  uni.matrices = {u};
  MatrixModuleFp idm;
  idm.p = 3;
  idm.dim = 2;
  idm.acting_generators = {"o0"};
  idm.matrices = {FpMatrix::identity(3, 2)};
  CHECK_FALSE(modules_isomorphic(uni, idm));
  CHECK(modules_isomorphic(uni, uni));
}

TEST_CASE("modules_isomorphic large intertwiner spaces") {
  // four copies of the regular F2[C2]-module against itself: the modular
  // route applies, the intertwiner space has 2^32 elements, and the seeded
  // random sampling must find an invertible intertwiner
  std::vector<int> swap4{1, 0, 3, 2, 5, 4, 7, 6};
  MatrixModuleFp M = perm_module(2, {swap4});
  CHECK(modules_isomorphic(M, M));

  // same dimensions, same character on the closure, but different Jordan
  // type: ranks of powers of (rho - 1) separate them before any search
  std::vector<int> id8{0, 1, 2, 3, 4, 5, 6, 7};
  MatrixModuleFp T8 = perm_module(2, {id8});
  CHECK_FALSE(modules_isomorphic(M, T8));
}

TEST_CASE("modules_isomorphic is an equivalence on a corpus") {
  Catalog cat = Catalog::builtin();
  std::vector<MatrixModuleFp> corpus;
  for (const char* g : {"C3", "C6", "S3", "A4"}) {
    RepSet X = rep_set(cat.get("C3"), cat.get(g), true);
    corpus.push_back(linearize(X, 3));
  }
  for (const auto& m : corpus) CHECK(modules_isomorphic(m, m));
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      bool ab = modules_isomorphic(a, b);
      CHECK(ab == modules_isomorphic(b, a));
      for (const auto& c : corpus)
        if (ab && modules_isomorphic(b, c)) CHECK(modules_isomorphic(a, c));
    }
}

TEST_CASE("out_sets_isomorphic") {
  Catalog cat = Catalog::builtin();

  RepSet X = rep_set(cat.get("C3"), cat.get("C6"), true);
  CHECK(out_sets_isomorphic(X, X));

  RepSet Y = rep_set(cat.get("C3"), cat.get("S3"), true);
  CHECK_FALSE(out_sets_isomorphic(X, Y));  // 2 points vs 1 point

  // 2-point set with trivial action vs 2-point swap: same sizes, different
  // stabilizers
  RepSet A = rep_set(cat.get("C3"), cat.get("C3"), false);  // {triv, id, inv}
  RepSet B = rep_set(cat.get("C3"), cat.get("C3"), false);
  CHECK(out_sets_isomorphic(A, B));

  CHECK_THROWS_AS(out_sets_isomorphic(X, rep_set(cat.get("C2"), cat.get("C6"), true)),
                  QMismatch);

  // implies module isomorphism on catalog samples
  struct Case {
    const char* q;
    const char* a;
    const char* b;
    int p;
  };
  for (Case c : {Case{"C3", "C6", "C6", 3}, Case{"C2", "S3", "C2", 2},
                 Case{"C3", "S3", "S3", 3}, Case{"E4", "S4", "S5", 2}}) {
    RepSet ra = rep_set(cat.get(c.q), cat.get(c.a), true);
    RepSet rb = rep_set(cat.get(c.q), cat.get(c.b), true);
    if (out_sets_isomorphic(ra, rb))
      CHECK(modules_isomorphic(linearize(ra, c.p), linearize(rb, c.p)));
  }
}

TEST_CASE("no injective classes when Q cannot embed") {
  Catalog cat = Catalog::builtin();
  struct Case {
    const char* q;
    const char* g;
    int p;
  };
  for (Case c : {Case{"C4", "S3", 2}, Case{"E4", "C12", 2}, Case{"C9", "E27", 3},
                 Case{"Q8", "S5", 2}}) {
    const FiniteGroup& Q = cat.get(c.q);
    const FiniteGroup& G = cat.get(c.g);
    int syl = sylow_subgroup(G, c.p).order();
    if (syl % Q.order() != 0) {
      RepSet X = rep_set(Q, G, true);
      CHECK(X.num_classes() == 0);
      CHECK(linearize(X, c.p).dim == 0);
    }
  }
  // Q8 does embed in nothing here but S5's Sylow is D8: 8 | 8, still no copy
  RepSet q8s5 = rep_set(cat.get("Q8"), cat.get("S5"), true);
  CHECK(q8s5.num_classes() == 0);
}
