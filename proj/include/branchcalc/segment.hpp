#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchcalc/exponent.hpp"

namespace branchcalc {

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* to_string(Side s);

/// The class {nu^e rho} of unramified twists of a cuspidal rho of G_r.
struct CuspidalLine {
  std::string id;
  int degree = 1;
  std::string dual_id;
};

/// Declared cuspidal lines. Undeclared ids are treated as self-dual lines of
/// degree one, so small hand-written inputs need no declarations.
class LineRegistry {
 public:
  /// Declares `id`; an empty `dual_id` means self-dual. Declaring a line whose
  /// dual is not yet known also declares the dual, with the same degree.
  void declare(const std::string& id, int degree, const std::string& dual_id = {});

  bool contains(const std::string& id) const { return lines_.count(id) != 0; }
  int degree(const std::string& id) const;
  const std::string& dual(const std::string& id) const;

  /// A line id not yet declared, of the form prefix + k for the smallest k > 0.
  std::string fresh_id(const std::string& prefix) const;

  const std::map<std::string, CuspidalLine>& lines() const { return lines_; }

 private:
  std::map<std::string, CuspidalLine> lines_;
};

/// A point nu^e rho of a cuspidal line.
struct CuspidalPoint {
  std::string line;
  Exponent exponent;

  friend bool operator==(const CuspidalPoint&, const CuspidalPoint&) = default;
  friend std::strong_ordering operator<=>(const CuspidalPoint& x, const CuspidalPoint& y);
};

/// Sorted multiset of points.
using Support = std::vector<CuspidalPoint>;

/// [nu^a rho, ..., nu^b rho] with b - a a non-negative integer.
class Segment {
 public:
  Segment(std::string line, Exponent a, Exponent b, int degree = 1);

  const std::string& line() const { return line_; }
  int degree() const { return degree_; }
  const Exponent& a() const { return a_; }
  const Exponent& b() const { return b_; }

  int rel_length() const { return static_cast<int>((b_ - a_).numerator()) + 1; }
  int abs_length() const { return degree_ * rel_length(); }

  bool contains(const Segment& other) const;
  Segment shifted(const Exponent& by) const { return Segment(line_, a_ + by, b_ + by, degree_); }

  friend bool operator==(const Segment& x, const Segment& y) {
    return x.line_ == y.line_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (line id, a, b).
  friend std::strong_ordering operator<=>(const Segment& x, const Segment& y);

 private:
  std::string line_;
  int degree_;
  Exponent a_;
  Exponent b_;
};

/// [a, b-k]; nullopt when every point is removed. k counts relative length.
std::optional<Segment> truncate_right(const Segment& s, int k);
/// [a+k, b]; nullopt when every point is removed.
std::optional<Segment> truncate_left(const Segment& s, int k);
std::optional<Segment> truncate(const Segment& s, int k, Side side);

bool linked(const Segment& x, const Segment& y);

/// (union, intersection) of a linked pair; the intersection is absent for
/// juxtaposed segments. Throws DomainError on an unlinked pair.
std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& x, const Segment& y);

Support support(const Segment& s);
void append_support(const Segment& s, Support& out);

std::string to_string(const Segment& s);
std::string to_string(const Support& s);

}  // namespace branchcalc
