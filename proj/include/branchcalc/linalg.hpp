#pragma once

#include <vector>

#include "branchcalc/rational.hpp"

namespace branchcalc {

/// Reduced row echelon form over Q; `pivots` lists the pivot column of each nonzero row.
struct Echelon {
  RationalMatrix reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(RationalMatrix a);
int rank(const RationalMatrix& a);
/// Columns form a basis of {x : a x = 0}.
RationalMatrix nullspace(const RationalMatrix& a);
/// Linearly independent subset of the columns of a (first occurrences kept).
RationalMatrix column_basis(const RationalMatrix& a);
/// Throws DomainError when a is singular.
RationalMatrix inverse(const RationalMatrix& a);
/// Columns of b completed by standard basis vectors to a basis of Q^n.
RationalMatrix complete_basis(const RationalMatrix& b);
/// Vertical stack of blocks with equal column counts.
RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, int cols);
/// Horizontal stack of blocks with equal row counts.
RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, int rows);

}  // namespace branchcalc
