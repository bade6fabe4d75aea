#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_set>

#include "branchcalc/branching.hpp"
#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

namespace {

// A point packs into one char16_t: 5 bits of line index, 11 bits of 2e + 1024.
constexpr int kMaxLines = 32;
constexpr int kOffset = 1024;
constexpr int kMaxAbs2 = 1000;

using Key = std::u16string;

struct CSeg {
  int line;
  int a2;
  int b2;
  int deg;
  int rel() const { return (b2 - a2) / 2 + 1; }
  friend bool operator<(const CSeg& x, const CSeg& y) {
    return std::tie(x.line, x.a2, x.b2) < std::tie(y.line, y.a2, y.b2);
  }
};

char16_t encode(int line, int e2) { return static_cast<char16_t>((line << 11) | (e2 + kOffset)); }

bool twice(const Exponent& e, int& out) {
  if (e.denominator() > 2) return false;
  const auto v = e.numerator() * (2 / e.denominator());
  if (v < -kMaxAbs2 || v > kMaxAbs2) return false;
  out = static_cast<int>(v);
  return true;
}

// Visits the supports (shifted by shift2, in half units) of the terms of the
// `side` derivative of order `amount` of St(segs). Subtrees keeping a point
// on a line >= `live_lines` are pruned: such supports can never match m2.
template <class Visit>
bool st_derivative_supports(const std::vector<CSeg>& segs, std::size_t pos, int remaining,
                            Side side, int shift2, int live_lines, Key& buf, Visit& visit) {
  if (pos == segs.size()) return remaining == 0 ? visit(static_cast<const Key&>(buf)) : false;
  const CSeg& s = segs[pos];
  const int max_j = std::min(s.rel(), remaining / s.deg);
  for (int j = 0; j <= max_j; ++j) {
    if (s.line >= live_lines && j < s.rel()) continue;
    const std::size_t mark = buf.size();
    // Right derivatives of St truncate from the left end, left ones from the right.
    const int lo = side == Side::Right ? s.a2 + 2 * j : s.a2;
    const int hi = side == Side::Right ? s.b2 : s.b2 - 2 * j;
    for (int e = lo; e <= hi; e += 2) buf.push_back(encode(s.line, e + shift2));
    const bool stop =
        st_derivative_supports(segs, pos + 1, remaining - j * s.deg, side, shift2, live_lines, buf, visit);
    buf.resize(mark);
    if (stop) return true;
  }
  return false;
}

}  // namespace

struct PackedSpectra::Impl {
  std::map<std::string, int> line_index;
  std::vector<std::string> line_ids;
  std::vector<CSeg> m2;
  std::vector<std::unordered_set<Key>> right;
  std::vector<std::unordered_set<Key>> left;

  const std::unordered_set<Key>* spectra(int i, Side side) const {
    const auto& table = side == Side::Right ? right : left;
    if (i < 0 || i >= static_cast<int>(table.size())) return nullptr;
    return &table[i];
  }
};

PackedSpectra::PackedSpectra(const Multisegment& m2) : m2_(m2), impl_(std::make_unique<Impl>()) {
  for (const auto& s : m2) impl_->line_index.emplace(s.line(), 0);
  int k = 0;
  for (auto& [id, index] : impl_->line_index) {
    index = k++;
    impl_->line_ids.push_back(id);
  }
  if (k >= kMaxLines) {
    packable_ = false;
    return;
  }
  for (const auto& s : m2) {
    CSeg c{impl_->line_index.at(s.line()), 0, 0, s.degree()};
    if (!twice(s.a(), c.a2) || !twice(s.b(), c.b2) || std::abs(c.a2) + 2 > kMaxAbs2 ||
        std::abs(c.b2) + 2 > kMaxAbs2) {
      packable_ = false;
      return;
    }
    impl_->m2.push_back(c);
  }
  const int n = m2.degree();
  impl_->right.resize(n + 1);
  impl_->left.resize(n + 1);
  Key buf;
  for (int i = 0; i <= n; ++i) {
    for (Side side : {Side::Right, Side::Left}) {
      auto& set = (side == Side::Right ? impl_->right : impl_->left)[i];
      auto insert = [&](const Key& points) {
        Key sorted = points;
        std::sort(sorted.begin(), sorted.end());
        set.insert(std::move(sorted));
        return false;
      };
      st_derivative_supports(impl_->m2, 0, i, side, 0, kMaxLines, buf, insert);
    }
  }
}

PackedSpectra::~PackedSpectra() = default;
PackedSpectra::PackedSpectra(PackedSpectra&&) noexcept = default;

namespace {

struct VerdictRun {
  const PackedSpectra::Impl& table;
  int live_lines;
  DeltaChoice choice;
  ExtVerdict verdict;
  std::optional<CSeg> fail_delta;

  bool collides(const CSeg& delta, const std::vector<CSeg>& pi, Side variant) const {
    const int shift2 = variant == Side::Right ? 1 : -1;
    int degree = 0;
    for (const auto& s : pi) degree += s.deg * s.rel();
    Key buf;
    for (int e = delta.a2; e <= delta.b2; e += 2) buf.push_back(encode(delta.line, e + shift2));
    for (int i = 0; i + 1 <= degree; ++i) {
      const auto* m2_side = table.spectra(i, opposite(variant));
      if (!m2_side || m2_side->empty()) continue;
      Key scratch;
      auto probe = [&](const Key& points) {
        scratch = points;
        std::sort(scratch.begin(), scratch.end());
        return m2_side->count(scratch) != 0;
      };
      if (st_derivative_supports(pi, 0, i + 1, variant, shift2, live_lines, buf, probe)) return true;
    }
    return false;
  }

  void node(std::vector<CSeg> m1, int next_line, int level) {
    std::size_t pick = m1.size();
    for (std::size_t k = 0; k < m1.size(); ++k) {
      if (m1[k].line >= live_lines) continue;
      if (pick == m1.size()) {
        pick = k;
      } else if (choice == DeltaChoice::Shortest ? m1[k].rel() < m1[pick].rel()
                                                 : m1[k].rel() > m1[pick].rel()) {
        pick = k;
      }
    }
    verdict.depth = level;
    if (pick == m1.size()) return;
    const CSeg delta = m1[pick];
    std::vector<CSeg> pi = m1;
    pi.erase(pi.begin() + static_cast<std::ptrdiff_t>(pick));

    Side variant = Side::Right;
    if (collides(delta, pi, Side::Right)) {
      if (collides(delta, pi, Side::Left)) {
        verdict.fail = true;
        fail_delta = delta;
        return;
      }
      variant = Side::Left;
    }
    ++(variant == Side::Right ? verdict.steps_right : verdict.steps_left);

    std::vector<CSeg> next = std::move(pi);
    next.push_back({next_line, 0, 0, delta.deg});
    if (delta.rel() > 1) next.push_back({delta.line, delta.a2 + 2, delta.b2, delta.deg});
    std::sort(next.begin(), next.end());
    node(std::move(next), next_line + 1, level + 1);
  }
};

ExtVerdict verdict_from_certificate(const ExtCertificate& cert) {
  ExtVerdict v;
  const Certificate* fail = first_fail(cert.root);
  v.fail = fail != nullptr;
  if (fail) v.fail_delta = fail->delta;
  v.depth = depth(cert.root);
  for (const Certificate* c = &cert.root; c; c = c->children.empty() ? nullptr : &c->children[0]) {
    if (c->kind != CertificateKind::Step) continue;
    ++(*c->variant == Side::Right ? v.steps_right : v.steps_left);
  }
  return v;
}

}  // namespace

ExtVerdict ext_vanishing_verdict(const Multisegment& m1, const PackedSpectra& m2,
                                 DeltaChoice choice) {
  if (!is_generic(m1)) throw DomainError("ext certificate: m1 is not generic");
  const auto& impl = m2.impl();
  std::vector<CSeg> packed;
  bool ok = m2.packable();
  // Lines absent from m2 get indices past the live range; their identity is irrelevant.
  std::map<std::string, int> dead;
  const int live = static_cast<int>(impl.line_index.size());
  for (const auto& s : m1) {
    if (!ok) break;
    CSeg c{0, 0, 0, s.degree()};
    auto it = impl.line_index.find(s.line());
    c.line = it != impl.line_index.end() ? it->second
                                         : live + dead.emplace(s.line(), static_cast<int>(dead.size())).first->second;
    ok = twice(s.a(), c.a2) && twice(s.b(), c.b2) && std::abs(c.a2) + 2 <= kMaxAbs2 &&
         std::abs(c.b2) + 2 <= kMaxAbs2;
    packed.push_back(c);
  }
  if (!ok) {
    CertifyOptions options;
    options.record_witnesses = false;
    options.require_generic_m2 = false;
    options.delta_choice = choice;
    LineRegistry lines;
    for (const auto& part : {m1, m2.m2()})
      for (const auto& s : part)
        if (!lines.contains(s.line())) lines.declare(s.line(), s.degree());
    return verdict_from_certificate(ext_vanishing_certificate(m1, m2.m2(), lines, options));
  }
  std::sort(packed.begin(), packed.end());
  VerdictRun run{impl, live, choice, {}, {}};
  run.node(std::move(packed), live + static_cast<int>(dead.size()), 0);
  if (run.fail_delta) {
    const CSeg& d = *run.fail_delta;
    run.verdict.fail_delta = Segment(impl.line_ids[d.line], Exponent(d.a2, 2), Exponent(d.b2, 2), d.deg);
  }
  return run.verdict;
}

}  // namespace branchcalc
