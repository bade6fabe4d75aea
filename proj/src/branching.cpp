#include "branchcalc/branching.hpp"

#include <algorithm>

#include "branchcalc/derivative.hpp"
#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

namespace {

Exponent filtration_twist(Side side) { return side == Side::Right ? half() : -half(); }

void shift(Support& s, const Exponent& by) {
  for (auto& p : s) p.exponent += by;
}

}  // namespace

std::vector<FiltrationLayer> bz_filtration(const InducedRep& rep, Side side) {
  if (rep.degree() < 1) throw DomainError("bz_filtration needs a representation of degree >= 1");
  const int n = rep.degree() - 1;
  std::vector<FiltrationLayer> layers;
  layers.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    layers.push_back({i, side, derive(rep, i + 1, side).twisted(filtration_twist(side)), i == n});
  }
  return layers;
}

std::vector<Multisegment> generic_subquotients_of_derivative(const Multisegment& m2, int i,
                                                             Side side) {
  std::vector<Multisegment> out;
  for (const auto& s : m2)
    if (s.rel_length() >= 3) return out;
  if (i < 0) return out;

  const std::size_t k = m2.size();
  std::vector<int> chosen(k, 0);
  auto rec = [&](auto& self, std::size_t pos, int remaining) -> void {
    if (pos == k) {
      if (remaining != 0) return;
      Multisegment result;
      for (std::size_t p = 0; p < k; ++p) result.insert(truncate(m2[p], chosen[p], side));
      out.push_back(std::move(result));
      return;
    }
    // Untruncated members must already be cuspidal.
    if (m2[pos].rel_length() == 1) {
      chosen[pos] = 0;
      self(self, pos + 1, remaining);
    }
    if (m2[pos].degree() <= remaining) {
      chosen[pos] = 1;
      self(self, pos + 1, remaining - m2[pos].degree());
      chosen[pos] = 0;
    }
  };
  rec(rec, 0, i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuotientCertificate quotient_obstruction(const Segment& delta, const Multisegment& m2,
                                         QuotientMode mode) {
  const int n = m2.degree();
  if (delta.abs_length() != n + 1)
    throw DomainError("quotient_obstruction: abs_length(D) = " +
                      std::to_string(delta.abs_length()) + " but degree(m2) + 1 = " +
                      std::to_string(n + 1));
  if (mode == QuotientMode::Theorem &&
      whittaker_dim(InducedRep(Flavor::Zel, m2)) == 1)
    throw DomainError("theorem mode concerns degenerate quotients; <m2> is generic");

  QuotientCertificate cert{delta, m2, false, {}, {}};
  // Right: nu^{1/2} St(D)^{(i+1)} against generic pieces of {}^{(i)}<m2>;
  // Left:  nu^{-1/2} {}^{(i+1)}St(D) against generic pieces of <m2>^{(i)}.
  for (Side side : {Side::Right, Side::Left}) {
    auto& matches = side == Side::Right ? cert.right : cert.left;
    for (int i = 0; i <= n; ++i) {
      for (const auto& term : derive_st_segment(delta, i + 1, side)) {
        Support s = support(term.twisted(filtration_twist(side)));
        for (const auto& g : generic_subquotients_of_derivative(m2, i, opposite(side)))
          if (support(g) == s) matches.push_back({i, s, g});
      }
    }
  }
  cert.obstructed = cert.right.empty() || cert.left.empty();
  return cert;
}

int m_count(const Multisegment& m1, const Multisegment& m2) {
  std::set<std::string> lines;
  for (const auto& s : m2) lines.insert(s.line());
  int count = 0;
  for (const auto& s : m1)
    if (lines.count(s.line())) count += s.rel_length();
  return count;
}

SpectraTable::SpectraTable(const Multisegment& m2) : m2_(m2) {
  const int n = m2.degree();
  right_.resize(n + 1);
  left_.resize(n + 1);
  const InducedRep rep(Flavor::St, m2);
  for (int i = 0; i <= n; ++i) {
    for (const auto& t : derive(rep, i, Side::Right)) right_[i].insert(support(t));
    for (const auto& t : derive(rep, i, Side::Left)) left_[i].insert(support(t));
  }
}

const std::set<Support>& SpectraTable::derivative_spectra(int i, Side side) const {
  static const std::set<Support> empty;
  const auto& table = side == Side::Right ? right_ : left_;
  if (i < 0 || i >= static_cast<int>(table.size())) return empty;
  return table[i];
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Base: return "BASE";
    case CertificateKind::Step: return "STEP";
    case CertificateKind::Fail: return "FAIL";
  }
  return "?";
}

std::optional<std::pair<Segment, Segment>> extract_linked_pair(const Segment& delta,
                                                               const Multisegment& m2,
                                                               std::string* how) {
  const int l = delta.rel_length();
  for (std::size_t i = 0; i < m2.size(); ++i) {
    const Segment& starts = m2[i];
    if (starts.line() != delta.line() || starts.a() != delta.a() + half() ||
        starts.rel_length() < l)
      continue;
    for (std::size_t j = 0; j < m2.size(); ++j) {
      const Segment& ends = m2[j];
      if (j == i || ends.line() != delta.line() || ends.b() != delta.b() - half() ||
          ends.rel_length() < l)
        continue;
      if (linked(starts, ends)) {
        if (how) *how = "truncation-argument";
        return std::make_pair(starts, ends);
      }
    }
  }
  auto trace = recombine_traced(m2);
  if (!trace.steps.empty()) {
    if (how) *how = "recombination-scan";
    return std::make_pair(trace.steps.front().first, trace.steps.front().second);
  }
  if (how) how->clear();
  return std::nullopt;
}

namespace {

struct VariantCheck {
  bool passes = true;
  std::vector<SpectrumWitness> witnesses;
  std::optional<Collision> collision;
};

VariantCheck check_variant(const Segment& delta, const Multisegment& pi,
                           const SpectraTable& table, Side variant, bool record) {
  VariantCheck out;
  const Exponent twist = filtration_twist(variant);
  Support delta_support = support(delta);
  const InducedRep pi_rep(Flavor::St, pi);
  // Feasible i: the (i+1)-th derivative of pi must exist.
  for (int i = 0; i + 1 <= pi.degree(); ++i) {
    // {}^{(i)}St(m2) pairs with the Right variant, St(m2)^{(i)} with the Left one.
    const auto& m2_side = table.derivative_spectra(i, opposite(variant));
    SpectrumWitness w{i, {}, {}};
    std::set<Support> seen;
    for (const auto& term : derive(pi_rep, i + 1, variant)) {
      Support s = delta_support;
      for (const auto& seg : term.m()) append_support(seg, s);
      std::sort(s.begin(), s.end());
      shift(s, twist);
      if (m2_side.count(s)) {
        out.passes = false;
        out.collision = Collision{variant, i, s};
        return out;
      }
      if (record) seen.insert(std::move(s));
    }
    if (record) {
      w.pi_side.assign(seen.begin(), seen.end());
      w.m2_side.assign(m2_side.begin(), m2_side.end());
      out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

Certificate certify_node(const Multisegment& m1, const SpectraTable& table, LineRegistry& lines,
                         const CertifyOptions& options) {
  Certificate node;
  node.m1 = m1;
  node.m_count = m_count(m1, table.m2());
  if (node.m_count == 0) {
    node.kind = CertificateKind::Base;
    return node;
  }

  std::set<std::string> m2_lines;
  for (const auto& s : table.m2()) m2_lines.insert(s.line());
  std::size_t pick = m1.size();
  for (std::size_t k = 0; k < m1.size(); ++k) {
    if (!m2_lines.count(m1[k].line())) continue;
    if (pick == m1.size()) {
      pick = k;
    } else if (options.delta_choice == DeltaChoice::Shortest
                   ? m1[k].rel_length() < m1[pick].rel_length()
                   : m1[k].rel_length() > m1[pick].rel_length()) {
      pick = k;
    }
  }
  const Segment delta = m1[pick];
  const Multisegment pi = m1.without(pick);
  node.delta = delta;

  VariantCheck right = check_variant(delta, pi, table, Side::Right, options.record_witnesses);
  VariantCheck left;
  if (!right.passes)
    left = check_variant(delta, pi, table, Side::Left, options.record_witnesses);

  if (!right.passes && !left.passes) {
    node.kind = CertificateKind::Fail;
    node.collisions = {*right.collision, *left.collision};
    node.linked_pair = extract_linked_pair(delta, table.m2(), &node.extraction);
    return node;
  }

  node.kind = CertificateKind::Step;
  node.variant = right.passes ? Side::Right : Side::Left;
  node.witnesses = std::move(right.passes ? right.witnesses : left.witnesses);

  const std::string fresh = lines.fresh_id("rho'_");
  lines.declare(fresh, delta.degree());
  node.fresh_line = CuspidalLine{fresh, delta.degree(), fresh};

  Multisegment next = pi;
  next.insert(Segment(fresh, 0, 0, delta.degree()));
  next.insert(truncate_left(delta, 1));
  node.children.push_back(certify_node(next, table, lines, options));
  return node;
}

}  // namespace

ExtCertificate ext_vanishing_certificate(const Multisegment& m1, const SpectraTable& m2_spectra,
                                         const LineRegistry& lines,
                                         const CertifyOptions& options) {
  if (!is_generic(m1)) throw DomainError("ext certificate: m1 is not generic");
  if (options.require_generic_m2 && !is_generic(m2_spectra.m2()))
    throw DomainError("ext certificate: m2 is not generic");
  ExtCertificate out{{}, m2_spectra.m2(), lines};
  out.root = certify_node(m1, m2_spectra, out.lines, options);
  return out;
}

ExtCertificate ext_vanishing_certificate(const Multisegment& m1, const Multisegment& m2,
                                         const LineRegistry& lines,
                                         const CertifyOptions& options) {
  return ext_vanishing_certificate(m1, SpectraTable(m2), lines, options);
}

bool has_fail(const Certificate& c) { return first_fail(c) != nullptr; }

const Certificate* first_fail(const Certificate& c) {
  if (c.kind == CertificateKind::Fail) return &c;
  for (const auto& child : c.children)
    if (auto f = first_fail(child)) return f;
  return nullptr;
}

int depth(const Certificate& c) {
  int d = 0;
  for (const auto& child : c.children) d = std::max(d, 1 + depth(child));
  return d;
}

int ep_pairing(const InducedRep& rep1, const InducedRep& rep2) {
  return whittaker_dim(rep1) * whittaker_dim(rep2);
}

}  // namespace branchcalc
