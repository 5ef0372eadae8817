#include "cubics/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cubics {

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int v = 0;
  for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * b[k];
  return v;
}

std::size_t rank_of(IntMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;  // exact division
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Int determinant(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const IntVec& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  }
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

IntMat adjugate(const IntMat& m) {
  const std::size_t n = m.size();
  IntMat adj(n, IntVec(n));
  if (n == 0) return adj;
  IntMat minor(n - 1, IntVec(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      Int cof = determinant(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : Int(-cof);
    }
  }
  return adj;
}

IntVec primitive(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
  return v;
}

}  // namespace cubics
