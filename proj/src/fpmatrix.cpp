#include "bclass/fpmatrix.hpp"

namespace bclass {

FpMatrix FpMatrix::zero(int p, int rows, int cols) {
  FpMatrix m;
  m.p = p;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, 0);
  return m;
}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m = zero(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const FpMatrix& x, const FpMatrix& y) {
  return x.p == y.p && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
  FpMatrix r = FpMatrix::zero(x.p, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = static_cast<uint8_t>((r.at(i, j) + v * y.at(k, j)) % x.p);
    }
  return r;
}

namespace {

int inv_mod(int a, int p) {
  // p is prime and a != 0 mod p
  int r = 1, e = p - 2, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// Row-reduce in place; returns pivot columns.
std::vector<int> row_reduce(FpMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    int inv = inv_mod(m.at(row, col), m.p);
    for (int c = 0; c < m.cols; ++c)
      m.at(row, c) = static_cast<uint8_t>(m.at(row, c) * inv % m.p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, col)) continue;
      int f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = static_cast<uint8_t>(
            (m.at(r, c) + (m.p - f) * m.at(row, c)) % m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int fp_rank(FpMatrix m) { return static_cast<int>(row_reduce(m).size()); }

bool fp_invertible(const FpMatrix& m) {
  if (m.rows != m.cols) return false;
  return fp_rank(m) == m.rows;
}

std::vector<std::vector<uint8_t>> fp_nullspace(FpMatrix m) {
  std::vector<int> pivots = row_reduce(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;

  std::vector<std::vector<uint8_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint8_t> v(m.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      int coeff = m.at(static_cast<int>(r), free);
      if (coeff) v[pivots[r]] = static_cast<uint8_t>((m.p - coeff) % m.p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bclass
