// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Target runtime: well under five minutes on a desktop.

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "bclass/burnside.hpp"
#include "bclass/catalog.hpp"
#include "bclass/classify.hpp"
#include "bclass/cli.hpp"
#include "bclass/fusion.hpp"
#include "bclass/repmod.hpp"

using namespace bclass;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, bool pass,
               const std::string& detail) {
  std::printf("%s criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", n,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  return ps;
}

// ---------------------------------------------------------------- 1 -------
void criterion1(const Catalog& cat) {
  long long triples = 0, disagreements = 0;
  for (const CatalogEntry& e : cat.entries()) {
    if (e.group.order() > 120) continue;
    for (int p : prime_divisors(e.group.order())) {
      OracleScan s = inclusion_oracle_scan(e.group, p);
      triples += s.triples;
      disagreements += s.disagreements;
    }
  }
  std::ostringstream d;
  d << triples << " (P,Q,phi) triples, " << disagreements << " disagreements";
  criterion(1, "stable-map equality matches fusion membership",
            triples >= 10000 && disagreements == 0, d.str());
}

// ---------------------------------------------------------------- 2 -------
void criterion2(const Catalog& cat) {
  int checked = 0, mp_c2_disagreements = 0, fusion_implication_violations = 0;
  for (size_t i = 0; i < cat.entries().size(); ++i) {
    for (size_t j = i; j < cat.entries().size(); ++j) {
      const FiniteGroup& A = cat.entries()[i].group;
      const FiniteGroup& B = cat.entries()[j].group;
      for (int p : {2, 3}) {
        int bound = std::max(sylow_subgroup(A, p).order(),
                             sylow_subgroup(B, p).order());
        Verdict stable = stable_equivalent_mp(A, B, p);
        Verdict c2 = condition2_bounded(A, B, p, bound, cat);
        Verdict fusion = alternative_classification(A, B, p);
        ++checked;
        if (stable.equivalent != c2.equivalent) ++mp_c2_disagreements;
        if (fusion.equivalent && !stable.equivalent)
          ++fusion_implication_violations;
      }
    }
  }
  std::ostringstream d;
  d << checked << " (pair, prime) checks, " << mp_c2_disagreements
    << " InjRep/Rep disagreements, " << fusion_implication_violations
    << " fusion=>stable violations";
  criterion(2, "classification theorems consistent on the catalog",
            mp_c2_disagreements == 0 && fusion_implication_violations == 0,
            d.str());
}

// ---------------------------------------------------------------- 3 -------
void criterion3(const Catalog& cat) {
  bool ok = true;
  std::ostringstream d;

  BurnsideBasis b22 = burnside_basis(cat.get("C2"), cat.get("C2"));
  ok &= b22.num_classes() == 3 && b22.reduced_rank() == 1;
  BurnsideBasis b33 = burnside_basis(cat.get("C3"), cat.get("C3"));
  ok &= b33.num_classes() == 4 && b33.reduced_rank() == 2;

  FusionSystem f = build_fusion_system(cat.get("S3"), 3);
  int c3 = -1;
  for (int i = 0; i < f.num_objects(); ++i)
    if (f.objects[i].order() == 3) c3 = i;
  ok &= c3 >= 0 && f.homs(c3, c3).size() == 2;

  ok &= rep_set(cat.get("C2"), cat.get("S3"), false).num_classes() == 2;
  ok &= rep_set(cat.get("C2"), cat.get("S3"), true).num_classes() == 1;
  ok &= all_subgroups(cat.get("D8")).size() == 10;
  ok &= automorphism_classes(cat.get("D8")).out_reps.size() == 2;

  d << "A(C2,C2)=" << b22.num_classes() << "/" << b22.reduced_rank()
    << ", A(C3,C3)=" << b33.num_classes() << "/" << b33.reduced_rank()
    << ", |Hom_F(C3,C3)|=" << (c3 >= 0 ? f.homs(c3, c3).size() : 0)
    << ", Rep(C2,S3)=" << rep_set(cat.get("C2"), cat.get("S3"), false).num_classes()
    << "/" << rep_set(cat.get("C2"), cat.get("S3"), true).num_classes()
    << ", #sub(D8)=" << all_subgroups(cat.get("D8")).size()
    << ", |Out(D8)|=" << automorphism_classes(cat.get("D8")).out_reps.size();
  criterion(3, "exact small-instance invariants", ok, d.str());
}

// ---------------------------------------------------------------- 4 -------
void criterion4(const Catalog& cat) {
  bool ok = true;
  std::ostringstream d;
  struct Case {
    const char* a;
    const char* b;
    int p;
    bool equivalent;
  };
  for (Case c : {Case{"S3", "C2", 2, true}, Case{"C6", "C3", 3, true},
                 Case{"S3", "C3", 3, false}, Case{"S3", "C6", 3, false}}) {
    const FiniteGroup& A = cat.get(c.a);
    const FiniteGroup& B = cat.get(c.b);
    Verdict fusion = alternative_classification(A, B, c.p);
    Verdict stable = stable_equivalent_mp(A, B, c.p);
    bool this_ok = fusion.equivalent == c.equivalent &&
                   stable.equivalent == c.equivalent;
    if (c.equivalent) {
      // verify the witness independently
      FusionSystem F1 = build_fusion_system(A, c.p);
      FusionSystem F2 = build_fusion_system(B, c.p);
      auto w = find_fusion_isomorphism(F1, F2);
      this_ok &= fusion.fusion_witness.has_value() && w.has_value() &&
                 is_fusion_isomorphism(w->gamma, F1, F2);
    } else {
      this_ok &= stable.module_witness.has_value() && !fusion.notes.empty();
    }
    ok &= this_ok;
    d << c.a << "/" << c.b << "@" << c.p << ":"
      << (this_ok ? "ok" : "WRONG") << " ";
  }
  criterion(4, "named classification verdicts with witnesses", ok, d.str());
}

// ---------------------------------------------------------------- 5 -------
void criterion5(const Catalog& cat) {
  long long systems = 0, classes_realized = 0;
  bool ok = true;
  std::string first_error;
  for (const CatalogEntry& e : cat.entries()) {
    const FiniteGroup& G = e.group;
    for (int p : prime_divisors(G.order())) {
      FusionSystem F = build_fusion_system(G, p);
      try {
        check_fusion_axioms(F);
      } catch (const std::exception& ex) {
        ok = false;
        if (first_error.empty())
          first_error = G.name() + "@" + std::to_string(p) + ": " + ex.what();
      }
      ++systems;
      for (const Subgroup& P : F.objects) {
        BurnsideBasis basis = burnside_basis(P, G);
        for (const BisetPair& cls : basis.classes) {
          ExplicitBiset bs = realize_biset(P, cls);
          // exact cardinality
          if (bs.size != G.order() * P.order() / cls.H.order()) {
            ok = false;
            if (first_error.empty()) first_error = "biset cardinality";
          }
          // freeness: every left orbit has size |G|
          std::vector<int> gens = minimal_generating_sequence(G.full());
          std::vector<int> orbit(bs.size, -1);
          for (int c = 0; c < bs.size; ++c) {
            if (orbit[c] >= 0) continue;
            std::vector<int> work{c};
            orbit[c] = c;
            int count = 0;
            while (!work.empty()) {
              int x = work.back();
              work.pop_back();
              ++count;
              for (int a : gens) {
                int y = bs.left_action[a][x];
                if (orbit[y] < 0) {
                  orbit[y] = c;
                  work.push_back(y);
                }
              }
            }
            if (count != G.order()) {
              ok = false;
              if (first_error.empty()) first_error = "left action not free";
            }
          }
          // commuting actions, all generator pairs, all points
          for (int a : gens)
            for (int gpos = 0; gpos < P.order(); ++gpos)
              for (int c = 0; c < bs.size; ++c)
                if (bs.left_action[a][bs.right_action[gpos][c]] !=
                    bs.right_action[gpos][bs.left_action[a][c]]) {
                  ok = false;
                  if (first_error.empty()) first_error = "actions do not commute";
                }
          // identity rows and the action law on generator pairs; together
          // with the construction this pins both actions as homomorphisms
          for (int c = 0; c < bs.size; ++c)
            if (bs.left_action[G.identity_index()][c] != c ||
                bs.right_action[P.pos_of(G.identity_index())][c] != c) {
              ok = false;
              if (first_error.empty()) first_error = "identity acts nontrivially";
            }
          for (int a : gens)
            for (int b : gens)
              for (int c = 0; c < bs.size; ++c)
                if (bs.left_action[G.mul(a, b)][c] !=
                    bs.left_action[a][bs.left_action[b][c]]) {
                  ok = false;
                  if (first_error.empty()) first_error = "left action law fails";
                }
          ++classes_realized;
        }
      }
    }
  }
  std::ostringstream d;
  d << systems << " fusion systems exhaustively checked, " << classes_realized
    << " basis classes realized and verified";
  if (!ok) d << "; first error: " << first_error;
  criterion(5, "fusion axioms and Burnside biset structure", ok, d.str());
}

// ---------------------------------------------------------------- 6 -------
void criterion6(const Catalog& cat) {
  std::mt19937 rng(20240501);
  long long reruns = 0, pairs_checked = 0;
  bool ok = true;
  std::string first_error;
  for (const CatalogEntry& e : cat.entries()) {
    const FiniteGroup& G = e.group;
    for (int p : prime_divisors(G.order())) {
      std::map<std::vector<int>, FusionSystem> built;
      std::vector<std::vector<int>> distinct;
      auto note = [&](const Subgroup& s) {
        if (!built.count(s.members)) {
          built.emplace(s.members, build_fusion_system_on(G, s, p));
          distinct.push_back(s.members);
        }
      };
      note(sylow_subgroup(G, p));
      for (int run = 0; run < 100; ++run) {
        note(sylow_subgroup(G, p, rng));
        ++reruns;
      }
      // any two outputs: conjugate, and the conjugation isomorphism is a
      // fusion isomorphism
      for (size_t i = 0; i < distinct.size(); ++i) {
        for (size_t j = i + 1; j < distinct.size(); ++j) {
          Subgroup s1{&G, distinct[i]};
          Subgroup s2{&G, distinct[j]};
          int conj_by = -1;
          for (int g = 0; g < G.order() && conj_by < 0; ++g)
            if (conjugate_subgroup(g, s1).members == s2.members) conj_by = g;
          ++pairs_checked;
          if (conj_by < 0) {
            ok = false;
            if (first_error.empty())
              first_error = G.name() + "@" + std::to_string(p) +
                            ": Sylow outputs not conjugate";
            continue;
          }
          Homomorphism gamma = conjugation_hom(G, conj_by, s1, s2);
          if (!is_fusion_isomorphism(gamma, built.at(distinct[i]),
                                     built.at(distinct[j]))) {
            ok = false;
            if (first_error.empty())
              first_error = G.name() + "@" + std::to_string(p) +
                            ": conjugation is not a fusion isomorphism";
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << reruns << " randomized reruns, " << pairs_checked
    << " Sylow pairs conjugate with fusion-compatible conjugation";
  if (!ok) d << "; first error: " << first_error;
  criterion(6, "Sylow uniqueness up to fusion-compatible conjugation", ok,
            d.str());
}

// ---------------------------------------------------------------- 7 -------
void criterion7() {
  std::vector<std::vector<std::string>> battery = {
      {"group", "list", "--json"},
      {"group", "show", "S5", "--json"},
      {"fusion", "table", "C2", "-p", "2", "--json"},
      {"fusion", "table", "S4", "-p", "2", "--json"},
      {"fusion", "compare", "S3", "C2", "-p", "2", "--json"},
      {"burnside", "basis", "C2", "C2", "--json"},
      {"burnside", "basis", "C3", "C3", "--json"},
      {"burnside", "check-prop", "S3", "-p", "3", "--json"},
      {"rep", "C2", "S3", "-p", "2", "--json"},
      {"rep", "C3", "C6", "-p", "3", "--injective", "--json"},
      {"classify", "stable", "S3", "C2", "-p", "2", "--json"},
      {"classify", "stable", "S4", "S5", "-p", "2", "--json"},
      {"classify", "fusion", "S3", "C6", "-p", "3", "--json"},
      {"classify", "search", "-p", "2", "--json"},
      {"classify", "search", "-p", "3", "--json"},
  };
  bool ok = true;
  long long bytes = 0;
  for (const auto& args : battery) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    bytes += static_cast<long long>(a.out.size());
    if (a.out != b.out || a.exit_code != b.exit_code || a.out.empty())
      ok = false;
  }
  std::ostringstream d;
  d << battery.size() << " commands run twice, " << bytes
    << " bytes of JSON byte-identical";
  criterion(7, "deterministic JSON reports under the fixed seed", ok, d.str());
}

}  // namespace

int main() {
  Catalog cat = Catalog::builtin();
  criterion1(cat);
  criterion2(cat);
  criterion3(cat);
  criterion4(cat);
  criterion5(cat);
  criterion6(cat);
  criterion7();
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures;
}
