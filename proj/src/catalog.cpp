#include "bclass/catalog.hpp"

#include <fstream>
#include <sstream>

namespace bclass {

namespace {

Perm cycle_perm(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
  for (const auto& cyc : cycles) {
    const int* data = cyc.begin();
    size_t n = cyc.size();
    for (size_t k = 0; k < n; ++k)
      img[data[k]] = static_cast<uint8_t>(data[(k + 1) % n]);
  }
  return Perm(std::move(img));
}

Perm rotation(int n) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>((i + 1) % n);
  return Perm(std::move(img));
}

Perm reflection(int n) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>((n - i) % n);
  return Perm(std::move(img));
}

}  // namespace

Catalog Catalog::builtin(const Caps& caps) {
  Catalog cat;
  auto add = [&](const std::string& name, int degree, std::vector<Perm> gens) {
    cat.add(name, FiniteGroup::closure(name, degree, std::move(gens), caps),
            "builtin");
  };

  add("C1", 1, {});
  for (int n = 2; n <= 12; ++n)
    add("C" + std::to_string(n), n, {rotation(n)});
  for (int n = 4; n <= 8; ++n)  // dihedral of order 2n on n points
    add("D" + std::to_string(2 * n), n, {rotation(n), reflection(n)});
  // quaternion group on its regular representation,
  // points 0..7 = 1,-1,i,-i,j,-j,k,-k
  add("Q8", 8,
      {cycle_perm(8, {{0, 2, 1, 3}, {4, 6, 5, 7}}),
       cycle_perm(8, {{0, 4, 1, 5}, {2, 7, 3, 6}})});
  for (int n = 3; n <= 5; ++n) {
    std::vector<Perm> gens{rotation(n), cycle_perm(n, {{0, 1}})};
    add("S" + std::to_string(n), n, std::move(gens));
  }
  add("A4", 4, {cycle_perm(4, {{0, 1, 2}}), cycle_perm(4, {{0, 1}, {2, 3}})});
  add("A5", 5, {cycle_perm(5, {{0, 1, 2, 3, 4}}), cycle_perm(5, {{0, 1, 2}})});
  add("E4", 4, {cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}})});
  add("E8", 6,
      {cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3}}), cycle_perm(6, {{4, 5}})});
  add("E9", 6, {cycle_perm(6, {{0, 1, 2}}), cycle_perm(6, {{3, 4, 5}})});
  add("E27", 9,
      {cycle_perm(9, {{0, 1, 2}}), cycle_perm(9, {{3, 4, 5}}),
       cycle_perm(9, {{6, 7, 8}})});
  return cat;
}

void Catalog::add(std::string name, FiniteGroup group, std::string source) {
  if (has(name)) throw InvalidArgument("duplicate group name: " + name);
  entries_.push_back(
      CatalogEntry{std::move(name), std::move(group), std::move(source)});
}

void Catalog::add_from_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file: " + path);

  std::string line, name;
  int degree = -1;
  std::vector<Perm> gens;
  std::vector<std::string> gen_lines;
  auto flush = [&] {
    if (name.empty() && degree < 0 && gen_lines.empty()) return;
    if (name.empty()) throw ParseError("catalog record without a name");
    if (degree < 1) throw ParseError("catalog record " + name + " without a degree");
    gens.clear();
    for (const std::string& g : gen_lines) gens.push_back(parse_cycles(g, degree));
    add(name, FiniteGroup::closure(name, degree, gens, caps), path);
    name.clear();
    degree = -1;
    gen_lines.clear();
  };

  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) {
      flush();  // blank line separates records
      continue;
    }
    if (key == "name") {
      if (!(ls >> name)) throw ParseError("malformed name line: " + line);
    } else if (key == "degree") {
      if (!(ls >> degree)) throw ParseError("malformed degree line: " + line);
    } else if (key == "gen") {
      std::string rest;
      std::getline(ls, rest);
      gen_lines.push_back(rest);
    } else {
      throw ParseError("unknown catalog key: " + key);
    }
  }
  flush();
}

bool Catalog::has(const std::string& name) const {
  for (const CatalogEntry& e : entries_)
    if (e.name == name) return true;
  return false;
}

const FiniteGroup& Catalog::get(const std::string& name) const {
  for (const CatalogEntry& e : entries_)
    if (e.name == name) return e.group;
  throw UnknownGroup("unknown group: " + name);
}

}  // namespace bclass
