#pragma once

#include <cstdint>
#include <vector>

namespace bclass {

// Dense matrix over the prime field F_p, row major.
struct FpMatrix {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  static FpMatrix zero(int p, int rows, int cols);
  static FpMatrix identity(int p, int n);
  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

bool operator==(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
int fp_rank(FpMatrix m);          // destroys its copy
bool fp_invertible(const FpMatrix& m);
// Basis of the right nullspace {v : m v = 0}, each vector of length m.cols.
std::vector<std::vector<uint8_t>> fp_nullspace(FpMatrix m);

}  // namespace bclass
