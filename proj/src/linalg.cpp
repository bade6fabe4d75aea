#include "branchcalc/linalg.hpp"

#include <utility>

#include "branchcalc/errors.hpp"

namespace branchcalc {

Echelon rref(RationalMatrix a) {
  Echelon e;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = Rational(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

int rank(const RationalMatrix& a) { return rref(a).rank(); }

RationalMatrix nullspace(const RationalMatrix& a) {
  const Echelon e = rref(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  RationalMatrix out = RationalMatrix::Zero(cols, cols - e.rank());
  int k = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, k) = 1;
    for (int r = 0; r < e.rank(); ++r) out(e.pivots[r], k) = -e.reduced(r, f);
    ++k;
  }
  return out;
}

RationalMatrix column_basis(const RationalMatrix& a) {
  const Echelon e = rref(a);
  RationalMatrix out(a.rows(), e.rank());
  for (int k = 0; k < e.rank(); ++k) out.col(k) = a.col(e.pivots[k]);
  return out;
}

RationalMatrix inverse(const RationalMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw DomainError("inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  const Echelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
  return e.reduced.rightCols(n);
}

RationalMatrix complete_basis(const RationalMatrix& b) {
  const int n = static_cast<int>(b.rows());
  return column_basis(hstack({b, RationalMatrix::Identity(n, n)}, n));
}

RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, int cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RationalMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, int rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  RationalMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace branchcalc
