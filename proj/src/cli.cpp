#include "bclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bclass/burnside.hpp"
#include "bclass/classify.hpp"
#include "bclass/fusion.hpp"
#include "bclass/repmod.hpp"

namespace bclass {

namespace {

using json = nlohmann::ordered_json;

struct Session {
  Caps caps;
  uint64_t seed = kDefaultSeed;
  bool json_mode = false;
  bool timing = false;
  std::string catalog_file;
  std::ostringstream out;

  Catalog catalog;
  std::chrono::steady_clock::time_point start;

  void load() {
    catalog = Catalog::builtin(caps);
    if (!catalog_file.empty()) catalog.add_from_file(catalog_file, caps);
    start = std::chrono::steady_clock::now();
  }

  json report(const std::string& command, json inputs, json result) {
    json r;
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    r["caps"] = {{"max_order", caps.max_order},
                 {"max_subgroup_ambient", caps.max_subgroup_ambient},
                 {"max_hom_source", caps.max_hom_source},
                 {"max_biset", caps.max_biset}};
    r["seed"] = seed;
    r["result"] = std::move(result);
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      r["timing_ms"] = ms;
    }
    return r;
  }

  void emit(const json& r, const std::string& text) {
    if (json_mode)
      out << r.dump(2) << "\n";
    else
      out << text;
  }
};

std::string cycles_of(const FiniteGroup& G, int idx) {
  return to_cycles(G.element(idx));
}

json subgroup_json(const Subgroup& s) {
  const FiniteGroup& G = *s.ambient;
  json gens = json::array();
  for (int g : minimal_generating_sequence(s)) gens.push_back(cycles_of(G, g));
  if (gens.empty()) gens.push_back("()");
  return json{{"order", s.order()}, {"generators", gens}};
}

json verdict_json(const Verdict& v) {
  json r;
  switch (v.kind) {
    case VerdictKind::stable_mp: r["kind"] = "stable_MP"; break;
    case VerdictKind::fusion_alt: r["kind"] = "fusion_alt"; break;
    case VerdictKind::condition2_bounded: r["kind"] = "condition2_bounded"; break;
  }
  r["equivalent"] = v.equivalent;
  if (v.fusion_witness) {
    json gi = json::array();
    for (const auto& [a, b] : v.fusion_witness->generator_images)
      gi.push_back(json{{"from", a}, {"to", b}});
    r["witness"] = {{"type", "fusion_isomorphism"}, {"generator_images", gi}};
  } else if (v.module_witness) {
    const ModuleWitness& w = *v.module_witness;
    r["witness"] = {{"type", "distinguishing_Q"},
                    {"label", w.q_label},
                    {"order", w.q_order},
                    {"generators", w.q_generators},
                    {"dim_left", w.dim_left},
                    {"dim_right", w.dim_right},
                    {"detail", w.detail}};
  } else {
    r["witness"] = nullptr;
  }
  json cands = json::array();
  for (const CandidateQ& c : v.candidate_Q_list) {
    json e{{"label", c.label}, {"order", c.order}, {"generators", c.generators}};
    if (c.dim_left >= 0) {
      e["dim_left"] = c.dim_left;
      e["dim_right"] = c.dim_right;
    }
    cands.push_back(std::move(e));
  }
  r["candidates"] = std::move(cands);
  r["bound_note"] = v.bound_note;
  r["notes"] = v.notes;
  return r;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
  if (v.fusion_witness) {
    os << "witness gamma:";
    for (const auto& [a, b] : v.fusion_witness->generator_images)
      os << " " << a << " -> " << b << ";";
    os << "\n";
  }
  if (v.module_witness) {
    os << "distinguishing Q: " << v.module_witness->q_label << " (order "
       << v.module_witness->q_order << "), module dims "
       << v.module_witness->dim_left << " vs " << v.module_witness->dim_right
       << " (" << v.module_witness->detail << ")\n";
  }
  os << "candidates checked: " << v.candidate_Q_list.size() << "\n";
  if (!v.notes.empty()) os << "note: " << v.notes << "\n";
  return os.str();
}

json fusion_table_json(const FusionSystem& F) {
  const FiniteGroup& G = *F.ambient;
  json r;
  r["prime"] = F.prime;
  r["ambient"] = F.ambient_label;
  r["base"] = subgroup_json(F.base);
  json objs = json::array();
  for (int i = 0; i < F.num_objects(); ++i) {
    json members = json::array();
    for (int m : F.objects[i].members) members.push_back(cycles_of(G, m));
    json obj = subgroup_json(F.objects[i]);
    obj["index"] = i;
    obj["members"] = members;
    objs.push_back(std::move(obj));
  }
  r["objects"] = std::move(objs);
  json homs = json::array();
  for (int i = 0; i < F.num_objects(); ++i)
    for (int j = 0; j < F.num_objects(); ++j) {
      json maps = json::array();
      for (const Homomorphism& h : F.homs(i, j)) {
        json images = json::array();
        for (int v : h.table) images.push_back(cycles_of(G, v));
        maps.push_back(std::move(images));
      }
      homs.push_back(json{{"from", i},
                          {"to", j},
                          {"count", F.homs(i, j).size()},
                          {"maps", std::move(maps)}});
    }
  r["homs"] = std::move(homs);
  return r;
}

int run_session(Session& s, const std::vector<std::string>& args,
                std::ostringstream& err) {
  CLI::App app{"finite-group classifying space toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", s.json_mode, "emit the full JSON report");
  app.add_flag("--timing", s.timing, "include timing in reports");
  app.add_option("--catalog", s.catalog_file, "extra catalog file");
  app.add_option("--seed", s.seed, "seed for the randomized intertwiner search");
  app.add_option("--max-order", s.caps.max_order, "group closure cap");
  app.add_option("--max-subgroup-ambient", s.caps.max_subgroup_ambient,
                 "subgroup enumeration cap");
  app.add_option("--max-hom-source", s.caps.max_hom_source,
                 "homomorphism source cap");
  app.add_option("--max-biset", s.caps.max_biset, "biset realization cap");

  int exit_code = 0;

  // group
  auto* grp = app.add_subcommand("group", "catalog queries");
  grp->require_subcommand(1);
  auto* grp_list = grp->add_subcommand("list", "list the catalog");
  grp_list->callback([&] {
    s.load();
    json names = json::array();
    std::ostringstream text;
    for (const CatalogEntry& e : s.catalog.entries()) {
      names.push_back(json{{"name", e.name},
                           {"order", e.group.order()},
                           {"degree", e.group.degree()},
                           {"source", e.source}});
      text << e.name << " order " << e.group.order() << " degree "
           << e.group.degree() << "\n";
    }
    s.emit(s.report("group list", json::object(), json{{"groups", names}}),
           text.str());
  });
  auto* grp_show = grp->add_subcommand("show", "show one group");
  std::string show_name;
  grp_show->add_option("name", show_name, "group name")->required();
  grp_show->callback([&] {
    s.load();
    const FiniteGroup& G = s.catalog.get(show_name);
    json gens = json::array();
    for (const Perm& g : G.generators()) gens.push_back(to_cycles(g));
    json result{{"name", G.name()},
                {"order", G.order()},
                {"degree", G.degree()},
                {"generators", gens}};
    std::ostringstream text;
    text << G.name() << ": order " << G.order() << ", degree " << G.degree();
    if (G.order() <= s.caps.max_subgroup_ambient) {
      auto classes = subgroup_conjugacy_classes(G, s.caps);
      size_t subs = 0;
      for (const auto& c : classes) subs += c.members.size();
      result["subgroups"] = subs;
      result["subgroup_classes"] = classes.size();
      text << ", " << subs << " subgroups in " << classes.size()
           << " conjugacy classes\n";
    } else {
      result["subgroups"] = nullptr;
      result["subgroup_classes"] = nullptr;
      text << ", subgroup enumeration skipped (order exceeds "
              "--max-subgroup-ambient)\n";
    }
    s.emit(s.report("group show", json{{"name", show_name}}, result),
           text.str());
  });

  // fusion
  auto* fus = app.add_subcommand("fusion", "fusion systems");
  fus->require_subcommand(1);
  auto* fus_table = fus->add_subcommand("table", "dump a fusion system");
  std::string fus_g;
  int fus_p = 2;
  fus_table->add_option("group", fus_g, "group name")->required();
  fus_table->add_option("-p,--prime", fus_p, "prime")->required();
  fus_table->callback([&] {
    s.load();
    const FiniteGroup& G = s.catalog.get(fus_g);
    FusionSystem F = build_fusion_system(G, fus_p, s.caps);
    json result = fusion_table_json(F);
    std::ostringstream text;
    text << "fusion system of " << G.name() << " at p=" << fus_p << ": "
         << F.num_objects() << " objects over a base of order "
         << F.base.order() << "\n";
    for (int i = 0; i < F.num_objects(); ++i)
      for (int j = 0; j < F.num_objects(); ++j)
        if (!F.homs(i, j).empty())
          text << "  Hom(" << i << "," << j << "): " << F.homs(i, j).size()
               << "\n";
    s.emit(s.report("fusion table", json{{"group", fus_g}, {"p", fus_p}},
                    result),
           text.str());
  });
  auto* fus_cmp = fus->add_subcommand("compare", "compare two fusion systems");
  std::string fc_a, fc_b;
  int fc_p = 2;
  fus_cmp->add_option("G", fc_a, "first group")->required();
  fus_cmp->add_option("G2", fc_b, "second group")->required();
  fus_cmp->add_option("-p,--prime", fc_p, "prime")->required();
  fus_cmp->callback([&] {
    s.load();
    Verdict v = alternative_classification(s.catalog.get(fc_a),
                                           s.catalog.get(fc_b), fc_p, s.caps);
    exit_code = v.equivalent ? 0 : 1;
    s.emit(s.report("fusion compare",
                    json{{"G", fc_a}, {"G2", fc_b}, {"p", fc_p}},
                    verdict_json(v)),
           verdict_text(v));
  });

  // burnside
  auto* bur = app.add_subcommand("burnside", "Burnside modules");
  bur->require_subcommand(1);
  auto* bur_basis = bur->add_subcommand("basis", "canonical basis of A(G,G')");
  std::string bb_a, bb_b;
  bur_basis->add_option("G", bb_a, "source group")->required();
  bur_basis->add_option("G2", bb_b, "target group")->required();
  bur_basis->callback([&] {
    s.load();
    const FiniteGroup& G = s.catalog.get(bb_a);
    const FiniteGroup& G2 = s.catalog.get(bb_b);
    BurnsideBasis basis = burnside_basis(G, G2, s.caps);
    json classes = json::array();
    for (int i = 0; i < basis.num_classes(); ++i) {
      const BisetPair& c = basis.classes[i];
      json phi = json::array();
      for (size_t k = 0; k < c.H.members.size(); ++k)
        phi.push_back(json::array({cycles_of(G, c.H.members[k]),
                                   cycles_of(G2, c.phi.table[k])}));
      classes.push_back(json{{"index", i},
                             {"subgroup", subgroup_json(c.H)},
                             {"phi", phi},
                             {"trivial", static_cast<bool>(basis.trivial_flags[i])}});
    }
    json result{{"classes", classes},
                {"rank", basis.num_classes()},
                {"reduced_rank", basis.reduced_rank()}};
    std::ostringstream text;
    text << "A(" << G.name() << "," << G2.name() << "): rank "
         << basis.num_classes() << ", reduced rank " << basis.reduced_rank()
         << "\n";
    s.emit(s.report("burnside basis", json{{"G", bb_a}, {"G2", bb_b}}, result),
           text.str());
  });
  auto* bur_prop = bur->add_subcommand(
      "check-prop", "agreement scan: fusion membership vs stable-map equality");
  std::string bp_g;
  int bp_p = 2;
  bur_prop->add_option("G", bp_g, "group name")->required();
  bur_prop->add_option("-p,--prime", bp_p, "prime")->required();
  bur_prop->callback([&] {
    s.load();
    OracleScan scan = inclusion_oracle_scan(s.catalog.get(bp_g), bp_p, s.caps);
    if (scan.disagreements != 0) exit_code = 1;
    json result{{"triples", scan.triples},
                {"disagreements", scan.disagreements}};
    std::ostringstream text;
    text << "triples checked: " << scan.triples
         << ", disagreements: " << scan.disagreements << "\n";
    s.emit(s.report("burnside check-prop", json{{"G", bp_g}, {"p", bp_p}},
                    result),
           text.str());
  });

  // rep
  auto* rep = app.add_subcommand("rep", "Rep(Q,G) as an Out(Q)-set");
  std::string rep_q, rep_g;
  int rep_p = 2;
  bool rep_inj = false;
  rep->add_option("Q", rep_q, "source group")->required();
  rep->add_option("G", rep_g, "target group")->required();
  rep->add_option("-p,--prime", rep_p, "prime")->required();
  rep->add_flag("--injective", rep_inj, "injective classes only");
  rep->callback([&] {
    s.load();
    const FiniteGroup& Q = s.catalog.get(rep_q);
    const FiniteGroup& G = s.catalog.get(rep_g);
    RepSet X = rep_set(Q, G, rep_inj, s.caps);
    json q_elems = json::array();
    for (int i = 0; i < Q.order(); ++i) q_elems.push_back(cycles_of(Q, i));
    json classes = json::array();
    for (int c = 0; c < X.num_classes(); ++c) {
      json images = json::array();
      for (int v : X.classes[c].table) images.push_back(cycles_of(G, v));
      classes.push_back(json{{"index", c}, {"images", images}});
    }
    json actions = json::array();
    for (int k = 0; k < X.num_out(); ++k) actions.push_back(X.action_of(k));
    json result{{"q_elements", q_elems},
                {"classes", classes},
                {"out_order", X.num_out()},
                {"out_action_convention",
                 "class(rho) -> class(rho o alpha^-1) per Out(Q) "
                 "representative alpha"},
                {"out_actions", actions},
                {"module_dim_at_p", X.num_classes()}};
    std::ostringstream text;
    text << (rep_inj ? "InjRep(" : "Rep(") << Q.name() << "," << G.name()
         << "): " << X.num_classes() << " classes, |Out(Q)| = " << X.num_out()
         << "\n";
    s.emit(s.report("rep",
                    json{{"Q", rep_q},
                         {"G", rep_g},
                         {"injective", rep_inj},
                         {"p", rep_p}},
                    result),
           text.str());
  });

  // classify
  auto* cls = app.add_subcommand("classify", "classification verdicts");
  cls->require_subcommand(1);
  auto* cls_stable = cls->add_subcommand("stable", "stable classification");
  std::string cs_a, cs_b;
  int cs_p = 2;
  cls_stable->add_option("G", cs_a, "first group")->required();
  cls_stable->add_option("G2", cs_b, "second group")->required();
  cls_stable->add_option("-p,--prime", cs_p, "prime")->required();
  cls_stable->callback([&] {
    s.load();
    Verdict v = stable_equivalent_mp(s.catalog.get(cs_a), s.catalog.get(cs_b),
                                     cs_p, s.caps, s.seed);
    exit_code = v.equivalent ? 0 : 1;
    s.emit(s.report("classify stable",
                    json{{"G", cs_a}, {"G2", cs_b}, {"p", cs_p}},
                    verdict_json(v)),
           verdict_text(v));
  });
  auto* cls_fusion = cls->add_subcommand("fusion", "fusion classification");
  std::string cf_a, cf_b;
  int cf_p = 2;
  cls_fusion->add_option("G", cf_a, "first group")->required();
  cls_fusion->add_option("G2", cf_b, "second group")->required();
  cls_fusion->add_option("-p,--prime", cf_p, "prime")->required();
  cls_fusion->callback([&] {
    s.load();
    Verdict v = alternative_classification(s.catalog.get(cf_a),
                                           s.catalog.get(cf_b), cf_p, s.caps);
    exit_code = v.equivalent ? 0 : 1;
    s.emit(s.report("classify fusion",
                    json{{"G", cf_a}, {"G2", cf_b}, {"p", cf_p}},
                    verdict_json(v)),
           verdict_text(v));
  });
  auto* cls_search = cls->add_subcommand(
      "search", "stably equivalent but not fusion-equivalent pairs");
  int se_p = 2;
  cls_search->add_option("-p,--prime", se_p, "prime")->required();
  cls_search->callback([&] {
    s.load();
    std::vector<const FiniteGroup*> groups;
    for (const CatalogEntry& e : s.catalog.entries())
      groups.push_back(&e.group);
    SearchResult r = distinguishing_search(groups, se_p, s.caps, s.seed);
    json se = json::array();
    for (const auto& [a, b] : r.stable_equivalent)
      se.push_back(json::array({a, b}));
    json di = json::array();
    for (const auto& [a, b] : r.distinguishing)
      di.push_back(json::array({a, b}));
    json result{{"pairs_scanned", r.pairs_scanned},
                {"stable_equivalent_pairs", se},
                {"distinguishing_pairs", di}};
    std::ostringstream text;
    text << "pairs scanned: " << r.pairs_scanned << "\n";
    text << "stably equivalent pairs: " << r.stable_equivalent.size() << "\n";
    for (const auto& [a, b] : r.stable_equivalent)
      text << "  " << a << " ~ " << b << "\n";
    text << "distinguishing pairs (stable yes, fusion no): "
         << r.distinguishing.size() << "\n";
    for (const auto& [a, b] : r.distinguishing)
      text << "  " << a << " / " << b << "\n";
    s.emit(s.report("classify search", json{{"p", se_p}}, result), text.str());
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, err);
    s.out << help.str();
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult r;
  Session s;
  std::ostringstream err;
  try {
    r.exit_code = run_session(s, args, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    r.exit_code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    r.exit_code = 2;
  }
  r.out = s.out.str();
  r.err = err.str();
  return r;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult r = run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace bclass
