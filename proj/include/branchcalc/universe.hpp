#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchcalc/multisegment.hpp"

namespace branchcalc {

/// A finite family of multisegments: every segment lies on one of `line_ids`
/// with end points on the grid lo, lo + step, ..., hi.
struct UniverseSpec {
  LineRegistry lines;
  std::vector<std::string> line_ids{"rho"};
  Exponent lo = 0;
  Exponent hi = 1;
  Exponent step = 1;
  int min_degree = 0;
  int max_degree = 2;
  std::optional<int> max_segments;
  bool generic_only = false;
};

/// Throws DomainError when the spec does not describe a finite universe.
void validate(const UniverseSpec& spec);

/// All segments of the universe in segment order.
std::vector<Segment> universe_segments(const UniverseSpec& spec);

/// Visits each multisegment exactly once in canonical order: by degree, then
/// number of segments, then lexicographically by the sorted segment list.
/// Stops early when `visit` returns false.
void for_each_multisegment(const UniverseSpec& spec,
                           const std::function<bool(const Multisegment&)>& visit);

std::vector<Multisegment> enumerate_multisegments(const UniverseSpec& spec);

/// Parses "a..b" with rational end points.
std::pair<Exponent, Exponent> parse_window(const std::string& text);

}  // namespace branchcalc
