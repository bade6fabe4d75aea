#include "branchcalc/segment.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "branchcalc/errors.hpp"

namespace branchcalc {

namespace {

std::strong_ordering compare(const Exponent& x, const Exponent& y) {
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw SchemaError("not a rational: '" + whole + "'");
  return value;
}

}  // namespace

std::string to_string(const Exponent& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Exponent parse_exponent(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Exponent(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw SchemaError("zero denominator in '" + text + "'");
  return Exponent(num, den);
}

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

void LineRegistry::declare(const std::string& id, int degree, const std::string& dual_id) {
  if (id.empty()) throw DomainError("line id must be non-empty");
  if (degree < 1) throw DomainError("line '" + id + "' must have degree >= 1");
  const std::string dual = dual_id.empty() ? id : dual_id;

  if (auto it = lines_.find(id); it != lines_.end()) {
    if (it->second.degree != degree || it->second.dual_id != dual)
      throw DomainError("conflicting redeclaration of line '" + id + "'");
    return;
  }
  if (dual != id) {
    if (auto it = lines_.find(dual); it != lines_.end()) {
      if (it->second.dual_id != id)
        throw DomainError("duality of '" + id + "' and '" + dual + "' is not an involution");
      if (it->second.degree != degree)
        throw DomainError("dual lines '" + id + "' and '" + dual + "' differ in degree");
    } else {
      lines_.emplace(dual, CuspidalLine{dual, degree, id});
    }
  }
  lines_.emplace(id, CuspidalLine{id, degree, dual});
}

int LineRegistry::degree(const std::string& id) const {
  auto it = lines_.find(id);
  return it == lines_.end() ? 1 : it->second.degree;
}

const std::string& LineRegistry::dual(const std::string& id) const {
  auto it = lines_.find(id);
  return it == lines_.end() ? id : it->second.dual_id;
}

std::string LineRegistry::fresh_id(const std::string& prefix) const {
  for (int k = 1;; ++k) {
    std::string candidate = prefix + std::to_string(k);
    if (!contains(candidate)) return candidate;
  }
}

std::strong_ordering operator<=>(const CuspidalPoint& x, const CuspidalPoint& y) {
  if (auto c = x.line <=> y.line; c != 0) return c;
  return compare(x.exponent, y.exponent);
}

Segment::Segment(std::string line, Exponent a, Exponent b, int degree)
    : line_(std::move(line)), degree_(degree), a_(a), b_(b) {
  if (degree_ < 1) throw DomainError("segment degree must be >= 1");
  const Exponent gap = b_ - a_;
  if (!is_integral(gap) || gap < 0)
    throw DomainError("segment [" + to_string(a_) + "," + to_string(b_) +
                      "]: b - a must be a non-negative integer");
}

bool Segment::contains(const Segment& other) const {
  return line_ == other.line_ && is_integral(other.a_ - a_) && a_ <= other.a_ &&
         other.b_ <= b_;
}

std::strong_ordering operator<=>(const Segment& x, const Segment& y) {
  if (auto c = x.line_ <=> y.line_; c != 0) return c;
  if (auto c = compare(x.a_, y.a_); c != 0) return c;
  return compare(x.b_, y.b_);
}

std::optional<Segment> truncate_right(const Segment& s, int k) {
  if (k < 0 || k > s.rel_length())
    throw DomainError("cannot truncate " + std::to_string(k) + " points from " + to_string(s));
  if (k == s.rel_length()) return std::nullopt;
  return Segment(s.line(), s.a(), s.b() - k, s.degree());
}

std::optional<Segment> truncate_left(const Segment& s, int k) {
  if (k < 0 || k > s.rel_length())
    throw DomainError("cannot truncate " + std::to_string(k) + " points from " + to_string(s));
  if (k == s.rel_length()) return std::nullopt;
  return Segment(s.line(), s.a() + k, s.b(), s.degree());
}

std::optional<Segment> truncate(const Segment& s, int k, Side side) {
  return side == Side::Left ? truncate_left(s, k) : truncate_right(s, k);
}

bool linked(const Segment& x, const Segment& y) {
  if (x.line() != y.line() || !is_integral(y.a() - x.a())) return false;
  if (x.contains(y) || y.contains(x)) return false;
  // Union is an interval of the line iff the gap between them is at most juxtaposition.
  return std::max(x.a(), y.a()) <= std::min(x.b(), y.b()) + 1;
}

std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& x,
                                                              const Segment& y) {
  if (!linked(x, y))
    throw DomainError("union_intersection: " + to_string(x) + " and " + to_string(y) +
                      " are not linked");
  Segment uni(x.line(), std::min(x.a(), y.a()), std::max(x.b(), y.b()), x.degree());
  const Exponent lo = std::max(x.a(), y.a());
  const Exponent hi = std::min(x.b(), y.b());
  if (lo > hi) return {uni, std::nullopt};
  return {uni, Segment(x.line(), lo, hi, x.degree())};
}

void append_support(const Segment& s, Support& out) {
  for (Exponent e = s.a(); e <= s.b(); e += 1) out.push_back({s.line(), e});
}

Support support(const Segment& s) {
  Support out;
  out.reserve(s.rel_length());
  append_support(s, out);
  return out;
}

std::string to_string(const Segment& s) {
  std::ostringstream os;
  os << s.line() << "[" << to_string(s.a()) << "," << to_string(s.b()) << "]";
  return os.str();
}

std::string to_string(const Support& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? ", " : "") << s[i].line << ":" << to_string(s[i].exponent);
  os << "}";
  return os.str();
}

}  // namespace branchcalc
