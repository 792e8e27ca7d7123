#include "bclass/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bclass/error.hpp"

namespace bclass {

Perm::Perm(std::vector<uint8_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (uint8_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidArgument("image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), uint8_t{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose permutations of different degree");
  Perm r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i)
    r.images_[i] = images_[rhs.images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i)
    r.images_[images_[i]] = static_cast<uint8_t>(i);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  int64_t ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = 1;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, static_cast<int64_t>(len));
  }
  return static_cast<int>(ord);
}

std::string to_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = 1;
      continue;
    }
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << j;
      seen[j] = 1;
      j = p[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), uint8_t{0});
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point index in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree) throw ParseError("point out of range in cycle notation: " + text);
      if (used[v]) throw ParseError("repeated point in cycle notation: " + text);
      used[v] = 1;
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

}  // namespace bclass
