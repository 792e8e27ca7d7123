#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bclass {

// A permutation of {0,...,degree-1} stored as its image array.
// Composition is function composition: (a * b)(x) = a(b(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);  // validates bijectivity
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  uint8_t operator[](int point) const { return images_[point]; }
  const std::vector<uint8_t>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<uint8_t> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".
// The identity prints as "()".
std::string to_cycles(const Perm& p);
Perm parse_cycles(const std::string& text, int degree);

}  // namespace bclass
