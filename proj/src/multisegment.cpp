#include "branchcalc/multisegment.hpp"

#include <algorithm>
#include <sstream>

namespace branchcalc {

Multisegment::Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

void Multisegment::insert(const Segment& s) {
  segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), s), s);
}

Multisegment Multisegment::without(std::size_t index) const {
  Multisegment out;
  out.segs_.reserve(segs_.size() - 1);
  for (std::size_t i = 0; i < segs_.size(); ++i)
    if (i != index) out.segs_.push_back(segs_[i]);
  return out;
}

int Multisegment::degree() const {
  int d = 0;
  for (const auto& s : segs_) d += s.abs_length();
  return d;
}

Multisegment Multisegment::shifted(const Exponent& by) const {
  Multisegment out;
  out.segs_.reserve(segs_.size());
  for (const auto& s : segs_) out.segs_.push_back(s.shifted(by));
  return out;
}

Support support(const Multisegment& m) {
  Support out;
  for (const auto& s : m) append_support(s, out);
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(Flavor f) { return f == Flavor::Zel ? "ZEL" : "ST"; }

InducedRep::InducedRep(Flavor flavor, Multisegment m, Exponent twist)
    : flavor_(flavor), m_(std::move(m)), twist_(m_.empty() ? Exponent(0) : twist) {}

bool operator==(const InducedRep& x, const InducedRep& y) {
  if (x.is_unit() || y.is_unit()) return x.is_unit() && y.is_unit();
  return x.flavor_ == y.flavor_ && x.twist_ == y.twist_ && x.m_ == y.m_;
}

std::strong_ordering operator<=>(const InducedRep& x, const InducedRep& y) {
  if (x.is_unit() || y.is_unit()) return y.is_unit() <=> x.is_unit();
  if (auto c = x.flavor_ <=> y.flavor_; c != 0) return c;
  if (auto c = x.m_ <=> y.m_; c != 0) return c;
  if (x.twist_ < y.twist_) return std::strong_ordering::less;
  if (y.twist_ < x.twist_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Support support(const InducedRep& rep) {
  Support out = support(rep.m());
  for (auto& p : out) p.exponent += rep.twist();
  return out;
}

FormalSum::FormalSum(std::initializer_list<InducedRep> terms) : terms_(terms) {
  std::sort(terms_.begin(), terms_.end());
}

void FormalSum::add(InducedRep term) {
  terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), term), std::move(term));
}

void FormalSum::add(const FormalSum& other) {
  for (const auto& t : other) add(t);
}

FormalSum FormalSum::twisted(const Exponent& by) const {
  FormalSum out;
  for (const auto& t : terms_) out.add(t.twisted(by));
  return out;
}

Segment dual(const Segment& s, const LineRegistry& lines) {
  return Segment(lines.dual(s.line()), -s.b(), -s.a(), s.degree());
}

InducedRep dual(const InducedRep& rep, const LineRegistry& lines) {
  std::vector<Segment> segs;
  segs.reserve(rep.m().size());
  for (const auto& s : rep.m()) segs.push_back(dual(s, lines));
  return InducedRep(rep.flavor(), Multisegment(std::move(segs)), -rep.twist());
}

FormalSum dual(const FormalSum& sum, const LineRegistry& lines) {
  FormalSum out;
  for (const auto& t : sum) out.add(dual(t, lines));
  return out;
}

Support dual(const Support& s, const LineRegistry& lines) {
  Support out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back({lines.dual(p.line), -p.exponent});
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Multisegment& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ", " : "") << to_string(m[i]);
  os << "}";
  return os.str();
}

std::string to_string(const InducedRep& rep) {
  std::ostringstream os;
  if (rep.twist() != 0) os << "nu^" << to_string(rep.twist()) << ".";
  os << to_string(rep.flavor()) << to_string(rep.m());
  return os.str();
}

std::string to_string(const FormalSum& sum) {
  if (sum.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < sum.size(); ++i)
    os << (i ? " + " : "") << to_string(sum.terms()[i]);
  return os.str();
}

}  // namespace branchcalc
