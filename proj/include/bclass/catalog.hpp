#pragma once

#include <deque>
#include <string>
#include <vector>

#include "bclass/group.hpp"

namespace bclass {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::string source;  // "builtin" or a file path
};

// A named collection of groups. Entries live in a deque so references stay
// valid while more groups are added.
class Catalog {
public:
  // C1-C12, D8-D16, Q8, S3-S5, A4-A5 and the elementary abelian 2- and
  // 3-groups of rank up to 3.
  static Catalog builtin(const Caps& caps = default_caps());

  void add(std::string name, FiniteGroup group, std::string source);
  // Text format: records separated by blank lines, each record
  //   name <label>
  //   degree <n>
  //   gen <cycles>     (one line per generator, 0-based cycle notation)
  void add_from_file(const std::string& path, const Caps& caps = default_caps());

  bool has(const std::string& name) const;
  const FiniteGroup& get(const std::string& name) const;  // throws UnknownGroup
  const std::deque<CatalogEntry>& entries() const { return entries_; }

private:
  std::deque<CatalogEntry> entries_;
};

}  // namespace bclass
