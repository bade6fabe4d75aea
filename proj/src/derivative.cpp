#include "branchcalc/derivative.hpp"

#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

namespace {

// Truncation depth (relative) of a single factor for absolute order i, or -1
// when that factor's i-th derivative vanishes.
int factor_depth(const Segment& s, Flavor flavor, int i) {
  const int r = s.degree();
  if (i == 0) return 0;
  if (i % r != 0) return -1;
  const int j = i / r;
  if (flavor == Flavor::Zel) return j == 1 ? 1 : -1;
  return j <= s.rel_length() ? j : -1;
}

// Right derivatives of St remove points on the left and vice versa; for <D>
// the removal side matches the derivative side.
Side removal_side(Flavor flavor, Side side) {
  return flavor == Flavor::St ? opposite(side) : side;
}

void leibniz(const InducedRep& rep, std::size_t pos, int remaining, Side side,
             Multisegment& acc, FormalSum& out) {
  const Multisegment& m = rep.m();
  if (pos == m.size()) {
    if (remaining == 0) out.add(InducedRep(rep.flavor(), acc, rep.twist()));
    return;
  }
  const Segment& s = m[pos];
  for (int i = 0; i <= remaining; i += s.degree()) {
    const int depth = factor_depth(s, rep.flavor(), i);
    if (depth < 0) continue;
    Multisegment next = acc;
    next.insert(truncate(s, depth, removal_side(rep.flavor(), side)));
    leibniz(rep, pos + 1, remaining - i, side, next, out);
  }
}

}  // namespace

FormalSum derive_zel_segment(const Segment& s, int i, Side side) {
  return derive(InducedRep(Flavor::Zel, Multisegment{s}), i, side);
}

FormalSum derive_st_segment(const Segment& s, int i, Side side) {
  return derive(InducedRep(Flavor::St, Multisegment{s}), i, side);
}

FormalSum derive(const InducedRep& rep, int i, Side side) {
  FormalSum out;
  if (i < 0 || i > rep.degree()) return out;
  Multisegment acc;
  leibniz(rep, 0, i, side, acc, out);
  return out;
}

int whittaker_dim(const InducedRep& rep) {
  if (rep.flavor() == Flavor::St) {
    if (!is_generic(rep.m()))
      throw DomainError("St(m) with linked segments is not an irreducible datum: " +
                        to_string(rep.m()));
    return 1;
  }
  for (const auto& s : rep.m())
    if (s.rel_length() != 1) return 0;
  return 1;
}

bool check_derivative_duality(const InducedRep& rep, int i, const LineRegistry& lines) {
  const InducedRep dual_rep = dual(rep, lines);
  for (Side side : {Side::Right, Side::Left}) {
    if (dual(derive(rep, i, side), lines) != derive(dual_rep, i, opposite(side))) return false;
  }
  return true;
}

}  // namespace branchcalc
