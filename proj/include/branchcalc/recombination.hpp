#pragma once

#include <optional>
#include <vector>

#include "branchcalc/multisegment.hpp"

namespace branchcalc {

bool is_generic(const Multisegment& m);

/// One rewrite: a linked pair replaced by its union and (possibly absent) intersection.
struct RewriteStep {
  Segment first;
  Segment second;
  Segment uni;
  std::optional<Segment> intersection;
};

struct Recombination {
  Multisegment canonical;
  std::vector<RewriteStep> steps;
};

/// Rewrites linked pairs until the multisegment is generic. The smallest
/// linked pair in segment order is always rewritten first.
Recombination recombine_traced(const Multisegment& m);
Multisegment recombine(const Multisegment& m);

/// The generic multisegment with the given support.
Multisegment generic_form(const Support& s, const LineRegistry& lines);

/// Every multisegment reachable by one rewrite of some linked pair.
std::vector<Multisegment> rewrite_successors(const Multisegment& m);

/// Per-member relative truncation counts and the side they apply to.
struct TruncationPattern {
  Side side = Side::Right;
  std::vector<int> counts;  // aligned with the sorted members of the source
  int amount = 0;           // absolute: sum of count * degree
};

struct Truncation {
  TruncationPattern pattern;
  Multisegment result;
};

/// All truncations of total absolute amount i, deduplicated by result (the
/// first pattern found for a result is kept). Ordered by result.
std::vector<Truncation> truncations(const Multisegment& m, int i, Side side);

/// Calls `visit(pattern_counts)` for every pattern of absolute amount i.
/// Enumeration order is lexicographic in the counts.
template <class Visit>
void for_each_truncation_pattern(const Multisegment& m, int i, Visit&& visit);

struct TruncationLemmaResult {
  bool holds = true;
  int i = 0;
  /// A right truncation whose recombination is not itself a right truncation.
  std::optional<Multisegment> witness;
  std::optional<Multisegment> witness_recombined;
  std::size_t checked = 0;
};

/// For generic m: the recombination of every right truncation of amount i is
/// again a right truncation of m (of the amount forced by degree). Throws
/// DomainError on non-generic input.
TruncationLemmaResult verify_truncation_lemma(const Multisegment& m, int i);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
void truncation_patterns_rec(const Multisegment& m, std::size_t pos, int remaining,
                             std::vector<int>& counts, Visit& visit) {
  if (pos == m.size()) {
    if (remaining == 0) visit(static_cast<const std::vector<int>&>(counts));
    return;
  }
  const int deg = m[pos].degree();
  const int max_k = std::min(m[pos].rel_length(), remaining / deg);
  for (int k = 0; k <= max_k; ++k) {
    counts[pos] = k;
    truncation_patterns_rec(m, pos + 1, remaining - k * deg, counts, visit);
  }
  counts[pos] = 0;
}
}  // namespace detail

template <class Visit>
void for_each_truncation_pattern(const Multisegment& m, int i, Visit&& visit) {
  if (i < 0) return;
  std::vector<int> counts(m.size(), 0);
  detail::truncation_patterns_rec(m, 0, i, counts, visit);
}

}  // namespace branchcalc
