#include "branchcalc/recombination.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "branchcalc/errors.hpp"

namespace branchcalc {

bool is_generic(const Multisegment& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (linked(m[i], m[j])) return false;
  return true;
}

namespace {

Multisegment apply_rewrite(const Multisegment& m, std::size_t i, std::size_t j,
                           RewriteStep* step) {
  auto [uni, inter] = union_intersection(m[i], m[j]);
  if (step) *step = RewriteStep{m[i], m[j], uni, inter};
  std::vector<Segment> segs;
  segs.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    if (k != i && k != j) segs.push_back(m[k]);
  segs.push_back(uni);
  if (inter) segs.push_back(*inter);
  return Multisegment(std::move(segs));
}

}  // namespace

Recombination recombine_traced(const Multisegment& m) {
  Recombination out{m, {}};
  for (;;) {
    const Multisegment& cur = out.canonical;
    bool rewritten = false;
    for (std::size_t i = 0; i < cur.size() && !rewritten; ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (!linked(cur[i], cur[j])) continue;
        RewriteStep step{cur[i], cur[j], cur[i], std::nullopt};
        Multisegment next = apply_rewrite(cur, i, j, &step);
        out.steps.push_back(std::move(step));
        out.canonical = std::move(next);
        rewritten = true;
        break;
      }
    }
    if (!rewritten) return out;
  }
}

Multisegment recombine(const Multisegment& m) { return recombine_traced(m).canonical; }

Multisegment generic_form(const Support& s, const LineRegistry& lines) {
  std::vector<Segment> singletons;
  singletons.reserve(s.size());
  for (const auto& p : s)
    singletons.emplace_back(p.line, p.exponent, p.exponent, lines.degree(p.line));
  return recombine(Multisegment(std::move(singletons)));
}

std::vector<Multisegment> rewrite_successors(const Multisegment& m) {
  std::vector<Multisegment> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (linked(m[i], m[j])) out.push_back(apply_rewrite(m, i, j, nullptr));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Truncation> truncations(const Multisegment& m, int i, Side side) {
  std::map<Multisegment, TruncationPattern> found;
  for_each_truncation_pattern(m, i, [&](const std::vector<int>& counts) {
    Multisegment result;
    for (std::size_t k = 0; k < m.size(); ++k) result.insert(truncate(m[k], counts[k], side));
    found.try_emplace(std::move(result), TruncationPattern{side, counts, i});
  });
  std::vector<Truncation> out;
  out.reserve(found.size());
  for (auto& [result, pattern] : found) out.push_back({pattern, result});
  return out;
}

TruncationLemmaResult verify_truncation_lemma(const Multisegment& m, int i) {
  if (!is_generic(m)) throw DomainError("truncation lemma requires a generic multisegment");
  TruncationLemmaResult res;
  res.i = i;

  std::map<int, std::set<Multisegment>> targets;
  auto target_set = [&](int j) -> const std::set<Multisegment>& {
    auto it = targets.find(j);
    if (it != targets.end()) return it->second;
    std::set<Multisegment> s;
    for (auto& t : truncations(m, j, Side::Right)) s.insert(std::move(t.result));
    return targets.emplace(j, std::move(s)).first->second;
  };

  for (const auto& t : truncations(m, i, Side::Right)) {
    ++res.checked;
    Multisegment g = recombine(t.result);
    // Recombination conserves support, so the depth is read off the degree.
    const int j = m.degree() - g.degree();
    if (!target_set(j).count(g)) {
      res.holds = false;
      res.witness = t.result;
      res.witness_recombined = g;
      return res;
    }
  }
  return res;
}

}  // namespace branchcalc
