#pragma once

namespace bclass {

// Work limits for the enumeration kernels. Everything in this library is
// exhaustive, so each entry point checks a cap before it starts grinding.
struct Caps {
  int max_order = 5040;            // group closure
  int max_subgroup_ambient = 512;  // subgroup lattice enumeration
  int max_hom_source = 128;        // homomorphism enumeration source
  int max_biset = 10000;           // explicit biset realization
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace bclass
