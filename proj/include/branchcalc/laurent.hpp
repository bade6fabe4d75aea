#pragma once

#include <map>
#include <string>

#include "branchcalc/rational.hpp"

namespace branchcalc {

/// Laurent polynomial in the formal parameter q with exact coefficients.
/// Canonical form stores no zero coefficients.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(C(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const C& c) {                    // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_[0] = c;
  }

  static LaurentPoly q(int power = 1) {
    LaurentPoly p;
    p.coeffs_[power] = C(1);
    return p;
  }

  const std::map<int, C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  C coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? C(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, C(-c));
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator-(const LaurentPoly& x) { return LaurentPoly() - x; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (const auto& [i, a] : x.coeffs_)
      for (const auto& [j, b] : y.coeffs_) out.add(i + j, C(a * b));
    return out;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Value at a specialization of q (nonzero when negative powers occur).
  C evaluate(const C& at) const {
    C out = 0;
    for (const auto& [k, c] : coeffs_) out += c * power(at, k);
    return out;
  }

 private:
  void add(int k, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, C> coeffs_;
};

using Symbolic = LaurentPoly<Rational>;

/// Highest powers first: "q^2 - 3 + 1/2 q^-1".
std::string to_string(const Symbolic& p);

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const Symbolic& p) { return p.is_zero(); }

}  // namespace branchcalc
