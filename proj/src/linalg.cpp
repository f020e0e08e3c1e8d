#include "omalg/linalg.hpp"

#include <stdexcept>

namespace omalg {

int rref(Mat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  for (const Vec& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  size_t lead = 0;
  int rank = 0;
  for (size_t c = 0; c < cols && lead < rows; ++c) {
    size_t piv = lead;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[lead], m[piv]);
    Rat inv = Rat(1) / m[lead][c];
    for (size_t j = c; j < cols; ++j) m[lead][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == lead || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[lead][j];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

int rank(Mat m) { return rref(m); }

Mat null_space(const Mat& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  Mat r = m;
  rref(r);
  // pivot column of each nonzero row
  std::vector<long> pivot_of_col(cols, -1);
  std::vector<size_t> pivots;
  for (size_t row = 0; row < r.size(); ++row) {
    size_t c = 0;
    while (c < cols && r[row][c] == 0) ++c;
    if (c == cols) break;
    pivot_of_col[c] = static_cast<long>(row);
    pivots.push_back(c);
  }
  Mat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec v(cols, Rat(0));
    v[free] = Rat(1);
    for (size_t c : pivots) v[c] = -r[static_cast<size_t>(pivot_of_col[c])][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size(), Rat(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), p = b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("dimension mismatch");
  Mat c(n, Vec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t m2 = 0; m2 < k; ++m2) {
      if (a[i][m2] == 0) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += a[i][m2] * b[m2][j];
    }
  return c;
}

Mat identity(int n) {
  Mat m(static_cast<size_t>(n), Vec(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
  return m;
}

}  // namespace omalg
