#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Mixed rational/integer equality; Boost's own overload recurses under C++20 rewritten comparisons.
namespace boost {
constexpr bool operator==(const rational<std::int64_t>& x, int y) {
  return x.denominator() == 1 && x.numerator() == y;
}
constexpr bool operator==(const rational<std::int64_t>& x, long y) {
  return x.denominator() == 1 && x.numerator() == y;
}
}  // namespace boost

namespace branchcalc {

/// Exact exponent e of a twist nu^e. Only integer and half-integer offsets
/// occur in practice, but arithmetic is over all rationals.
using Exponent = boost::rational<std::int64_t>;

inline bool is_integral(const Exponent& x) { return x.denominator() == 1; }

inline Exponent half() { return Exponent(1, 2); }

std::string to_string(const Exponent& x);

/// Parses "3", "-1/2", "7/4".
Exponent parse_exponent(const std::string& text);

}  // namespace branchcalc
