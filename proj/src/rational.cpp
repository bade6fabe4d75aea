#include "branchcalc/rational.hpp"

#include "branchcalc/errors.hpp"
#include "branchcalc/laurent.hpp"

namespace branchcalc {

Rational power(const Rational& x, int k) {
  if (k < 0) {
    if (x == 0) throw DomainError("negative power of zero");
    return power(Rational(1) / x, -k);
  }
  Rational out = 1;
  Rational base = x;
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw SchemaError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Symbolic& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k != 0;
    if (!unit) out += mag.get_str();
    if (k != 0) {
      if (!unit) out += " ";
      out += "q";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace branchcalc
