#pragma once

#include <optional>
#include <vector>

#include "cohesionlab/rational.hpp"

namespace clab {

// Dense exact rational matrices, row-major. Desk scale only.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QMat qmat(size_t rows, size_t cols) { return QMat(rows, QVec(cols, Rational(0))); }

/// Row echelon form in place; returns pivot column per row rank.
inline std::vector<size_t> row_reduce(QMat& m) {
  std::vector<size_t> pivots;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(QMat m) { return row_reduce(m).size(); }

/// Solves A x = b; nullopt when inconsistent. Free variables are set to 0.
inline std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  QMat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  for (size_t i = pivots.size(); i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  for (size_t c : pivots)
    if (c == cols) return std::nullopt;
  QVec x(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

/// Expresses v in terms of the columns of basis (each QVec a column); nullopt
/// when v is outside the span.
inline std::optional<QVec> coordinates_in(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) {
    for (auto& c : v)
      if (c != 0) return std::nullopt;
    return QVec{};
  }
  size_t dim = basis[0].size();
  QMat a = qmat(dim, basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
  return solve_linear(a, v);
}

/// Maximal linearly independent subset, in input order.
inline std::vector<QVec> independent_subset(const std::vector<QVec>& vecs) {
  std::vector<QVec> basis;
  QMat acc;
  for (const QVec& v : vecs) {
    acc.push_back(v);
    QMat test = acc;
    if (row_reduce(test).size() > basis.size())
      basis.push_back(v);
    else
      acc.pop_back();
  }
  return basis;
}

}  // namespace clab
