#pragma once

#include "branchcalc/multisegment.hpp"

namespace branchcalc {

/// i-th derivative of <D>: nonzero only for i = 0 and i = degree(line).
/// Right derivatives remove the right end point, left ones the left end point.
FormalSum derive_zel_segment(const Segment& s, int i, Side side);

/// i-th derivative of St(D): nonzero only for i = j * degree(line), j <= rel(D).
/// The right derivative truncates j points from the left; the left one from the right.
FormalSum derive_st_segment(const Segment& s, int i, Side side);

/// Leibniz expansion over the factors of `rep`; the twist rides along on every term.
FormalSum derive(const InducedRep& rep, int i, Side side);

/// Dimension of the Whittaker model of the irreducible designated by `rep`:
/// <m> for ZEL, St(m) with generic m for ST. Throws DomainError for ST with
/// non-generic m.
int whittaker_dim(const InducedRep& rep);

/// dual(derive(rep, i, side)) == derive(dual(rep), i, opposite(side)) for both sides.
bool check_derivative_duality(const InducedRep& rep, int i, const LineRegistry& lines);

}  // namespace branchcalc
