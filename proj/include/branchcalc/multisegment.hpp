#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "branchcalc/segment.hpp"

namespace branchcalc {

/// A multiset of segments, stored sorted in segment order. Absent (empty)
/// segments are never stored.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(std::vector<Segment> segs);

  void insert(const Segment& s);
  void insert(const std::optional<Segment>& s) {
    if (s) insert(*s);
  }
  /// Removes the member at position `index` of the sorted storage.
  Multisegment without(std::size_t index) const;

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }
  const Segment& operator[](std::size_t i) const { return segs_[i]; }
  auto begin() const { return segs_.begin(); }
  auto end() const { return segs_.end(); }

  int degree() const;
  Multisegment shifted(const Exponent& by) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment& x, const Multisegment& y) {
    return x.segs_ <=> y.segs_;
  }

 private:
  std::vector<Segment> segs_;
};

Support support(const Multisegment& m);

/// Zelevinsky <D1> x ... x <Dk> or Steinberg St(D1) x ... x St(Dk).
enum class Flavor { Zel, St };
const char* to_string(Flavor f);

/// A flavored product of segment representations twisted by nu^twist.
/// The degree-0 unit compares equal across flavors and carries no twist.
class InducedRep {
 public:
  InducedRep(Flavor flavor, Multisegment m, Exponent twist = 0);

  Flavor flavor() const { return flavor_; }
  const Multisegment& m() const { return m_; }
  const Exponent& twist() const { return twist_; }
  int degree() const { return m_.degree(); }
  bool is_unit() const { return m_.empty(); }

  InducedRep twisted(const Exponent& by) const { return InducedRep(flavor_, m_, twist_ + by); }

  friend bool operator==(const InducedRep& x, const InducedRep& y);
  friend std::strong_ordering operator<=>(const InducedRep& x, const InducedRep& y);

 private:
  Flavor flavor_;
  Multisegment m_;
  Exponent twist_;
};

/// Support with every exponent shifted by the twist.
Support support(const InducedRep& rep);

/// Multiset of InducedRep terms (filtration subquotients). Zero is the empty sum.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(std::initializer_list<InducedRep> terms);

  void add(InducedRep term);
  void add(const FormalSum& other);

  const std::vector<InducedRep>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalSum twisted(const Exponent& by) const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::vector<InducedRep> terms_;  // sorted
};

/// Contragredient: [a,b] on L becomes [-b,-a] on dual(L); the twist negates.
Segment dual(const Segment& s, const LineRegistry& lines);
InducedRep dual(const InducedRep& rep, const LineRegistry& lines);
FormalSum dual(const FormalSum& sum, const LineRegistry& lines);
Support dual(const Support& s, const LineRegistry& lines);

std::string to_string(const Multisegment& m);
std::string to_string(const InducedRep& rep);
std::string to_string(const FormalSum& sum);

}  // namespace branchcalc
