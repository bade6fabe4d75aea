#include "branchcalc/universe.hpp"

#include <algorithm>

#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

void validate(const UniverseSpec& spec) {
  if (spec.step <= 0) throw DomainError("universe step must be positive");
  if (spec.step.denominator() > 2 || spec.lo.denominator() > 2 || spec.hi.denominator() > 2)
    throw DomainError("universe exponents must have denominator <= 2");
  if (spec.lo > spec.hi) throw DomainError("empty exponent window");
  if (spec.max_degree < 0) throw DomainError("degree bound must be non-negative");
  if (spec.line_ids.empty()) throw DomainError("universe needs at least one line");
}

std::vector<Segment> universe_segments(const UniverseSpec& spec) {
  validate(spec);
  std::vector<Exponent> grid;
  for (Exponent x = spec.lo; x <= spec.hi; x += spec.step) grid.push_back(x);
  std::vector<Segment> out;
  for (const auto& id : spec.line_ids) {
    const int degree = spec.lines.degree(id);
    if (degree > spec.max_degree) continue;
    for (const auto& a : grid)
      for (const auto& b : grid)
        if (b >= a && is_integral(b - a)) {
          Segment s(id, a, b, degree);
          if (s.abs_length() <= spec.max_degree) out.push_back(std::move(s));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Walker {
  const UniverseSpec& spec;
  const std::vector<Segment>& segs;
  const std::function<bool(const Multisegment&)>& visit;
  std::vector<std::size_t> picked;
  int min_abs = 1;
  bool stopped = false;

  // Non-decreasing index sequences of length `count` with total degree `degree`.
  void run(std::size_t pos, std::size_t count, int remaining, std::size_t from) {
    if (stopped) return;
    if (pos == count) {
      if (remaining != 0) return;
      std::vector<Segment> chosen;
      chosen.reserve(count);
      for (auto k : picked) chosen.push_back(segs[k]);
      Multisegment m(std::move(chosen));
      if (spec.generic_only && !is_generic(m)) return;
      if (!visit(m)) stopped = true;
      return;
    }
    const int slots_after = static_cast<int>(count - pos - 1);
    for (std::size_t k = from; k < segs.size() && !stopped; ++k) {
      const int abs = segs[k].abs_length();
      if (abs > remaining || remaining - abs < slots_after * min_abs) continue;
      picked[pos] = k;
      run(pos + 1, count, remaining - abs, k);
    }
  }
};

}  // namespace

void for_each_multisegment(const UniverseSpec& spec,
                           const std::function<bool(const Multisegment&)>& visit) {
  const auto segs = universe_segments(spec);
  Walker w{spec, segs, visit, {}, 1, false};
  if (!segs.empty()) {
    w.min_abs = segs.front().abs_length();
    for (const auto& s : segs) w.min_abs = std::min(w.min_abs, s.abs_length());
  }
  for (int d = std::max(spec.min_degree, 0); d <= spec.max_degree && !w.stopped; ++d) {
    if (d == 0) {
      if (!visit(Multisegment{})) return;
      continue;
    }
    if (segs.empty()) break;
    std::size_t max_count = static_cast<std::size_t>(d / w.min_abs);
    if (spec.max_segments) max_count = std::min<std::size_t>(max_count, *spec.max_segments);
    for (std::size_t c = 1; c <= max_count && !w.stopped; ++c) {
      w.picked.assign(c, 0);
      w.run(0, c, d, 0);
    }
  }
}

std::vector<Multisegment> enumerate_multisegments(const UniverseSpec& spec) {
  std::vector<Multisegment> out;
  for_each_multisegment(spec, [&](const Multisegment& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::pair<Exponent, Exponent> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw SchemaError("window must look like a..b, got '" + text + "'");
  return {parse_exponent(text.substr(0, dots)), parse_exponent(text.substr(dots + 2))};
}

}  // namespace branchcalc
