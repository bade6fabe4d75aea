#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "branchcalc/errors.hpp"
#include "branchcalc/laurent.hpp"
#include "branchcalc/permutation.hpp"

namespace branchcalc {

/// Basis monomial theta^lambda T_w of the Bernstein presentation.
struct HeckeMonomial {
  Weight lambda;
  Permutation w;
  friend bool operator==(const HeckeMonomial&, const HeckeMonomial&) = default;
  friend auto operator<=>(const HeckeMonomial&, const HeckeMonomial&) = default;
};

/// Sum of c * theta^lambda T_w over a scalar ring R (Symbolic or Rational).
template <class R>
class HeckeElement {
 public:
  explicit HeckeElement(int rank = 0) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<HeckeMonomial, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Weight& lambda, const Permutation& w, const R& c) {
    if (branchcalc::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(HeckeMonomial{lambda, w}, c);
    if (!inserted) {
      it->second += c;
      if (branchcalc::is_zero(it->second)) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check_rank(o);
    for (const auto& [mono, c] : o.terms_) add(mono.lambda, mono.w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check_rank(o);
    for (const auto& [mono, c] : o.terms_) add(mono.lambda, mono.w, R(-c));
    return *this;
  }
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }
  friend HeckeElement operator*(const R& c, const HeckeElement& x) {
    HeckeElement out(x.rank_);
    for (const auto& [mono, d] : x.terms_) out.add(mono.lambda, mono.w, R(c * d));
    return out;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  void check_rank(const HeckeElement& o) const {
    if (o.rank_ != rank_) throw DomainError("Hecke element rank mismatch");
  }

  int rank_;
  std::map<HeckeMonomial, R> terms_;
};

/// Element written as sum of c * T_w theta^lambda (T on the left); used to
/// evaluate theta on the right against a character.
template <class R>
using TLeftForm = std::map<std::pair<Permutation, Weight>, R>;

/// Affine Hecke algebra of GL_m in the Bernstein presentation with parameter q.
/// Products are returned in the theta-left normal form theta^lambda T_w.
template <class R>
class HeckeAlgebra {
 public:
  HeckeAlgebra(int m, R q) : m_(m), q_(std::move(q)) {
    if (m < 1) throw DomainError("Hecke algebra rank must be >= 1");
  }

  int rank() const { return m_; }
  const R& q() const { return q_; }

  HeckeElement<R> one() const { return monomial(Weight(m_, 0), Permutation::identity(m_)); }
  HeckeElement<R> monomial(const Weight& lambda, const Permutation& w, R c = R(1)) const {
    HeckeElement<R> x(m_);
    x.add(lambda, w, c);
    return x;
  }
  HeckeElement<R> theta(const Weight& lambda) const {
    return monomial(lambda, Permutation::identity(m_));
  }
  /// theta_i^{power}, 1-based i.
  HeckeElement<R> theta(int i, int power = 1) const {
    Weight lambda(m_, 0);
    lambda[i - 1] = power;
    return theta(lambda);
  }
  HeckeElement<R> T(const Permutation& w) const { return monomial(Weight(m_, 0), w); }
  HeckeElement<R> T(int k) const { return T(Permutation::simple(m_, k)); }

  /// Correction term of T_{s_k} theta^lambda = theta^{s_k lambda} T_{s_k} + (q-1) G:
  /// the geometric sum (theta^lambda - theta^{s_k lambda}) / (1 - theta_{k+1} theta_k^{-1}).
  std::vector<std::pair<Weight, int>> correction(int k, const Weight& lambda) const {
    std::vector<std::pair<Weight, int>> out;
    const int d = lambda[k - 1] - lambda[k];
    if (d > 0) {
      for (int j = 0; j < d; ++j) {
        Weight nu = lambda;
        nu[k - 1] -= j;
        nu[k] += j;
        out.emplace_back(std::move(nu), 1);
      }
    } else {
      for (int j = 1; j <= -d; ++j) {
        Weight nu = lambda;
        nu[k - 1] += j;
        nu[k] -= j;
        out.emplace_back(std::move(nu), -1);
      }
    }
    return out;
  }

  /// T_{s_k} T_u in the finite Hecke algebra, as (perm, coefficient) pairs.
  std::vector<std::pair<Permutation, R>> simple_times(int k, const Permutation& u) const {
    const Permutation s = Permutation::simple(m_, k);
    const Permutation su = s * u;
    if (su.length() > u.length()) return {{su, R(1)}};
    return {{u, R(q_ - R(1))}, {su, q_}};
  }
  /// T_u T_{s_k}.
  std::vector<std::pair<Permutation, R>> times_simple(const Permutation& u, int k) const {
    const Permutation s = Permutation::simple(m_, k);
    const Permutation us = u * s;
    if (us.length() > u.length()) return {{us, R(1)}};
    return {{u, R(q_ - R(1))}, {us, q_}};
  }

  /// T_u T_v in the finite Hecke algebra.
  std::map<Permutation, R> finite_product(const Permutation& u, const Permutation& v) const {
    std::map<Permutation, R> acc{{v, R(1)}};
    const auto word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      std::map<Permutation, R> next;
      for (const auto& [p, c] : acc)
        for (const auto& [p2, c2] : simple_times(*it, p)) accumulate(next, p2, R(c * c2));
      acc = std::move(next);
    }
    return acc;
  }

  /// T_w theta^mu in normal form.
  HeckeElement<R> t_times_theta(const Permutation& w, const Weight& mu) const {
    HeckeElement<R> acc = theta(mu);
    const auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = simple_times_element(*it, acc);
    return acc;
  }

  HeckeElement<R> multiply(const HeckeElement<R>& x, const HeckeElement<R>& y) const {
    if (x.rank() != m_ || y.rank() != m_) throw DomainError("Hecke multiply: rank mismatch");
    HeckeElement<R> out(m_);
    for (const auto& [a, c] : x.terms()) {
      for (const auto& [b, d] : y.terms()) {
        const R cd = c * d;
        const HeckeElement<R> mid = t_times_theta(a.w, b.lambda);
        for (const auto& [mono, e] : mid.terms()) {
          const Weight lambda = add(a.lambda, mono.lambda);
          for (const auto& [p, f] : finite_product(mono.w, b.w)) out.add(lambda, p, R(cd * e * f));
        }
      }
    }
    return out;
  }

  /// Rewrites x as sum of T_w theta^lambda.
  TLeftForm<R> to_t_left(const HeckeElement<R>& x) const {
    TLeftForm<R> out;
    for (const auto& [mono, c] : x.terms()) {
      TLeftForm<R> acc{{{Permutation::identity(m_), mono.lambda}, c}};
      // theta^nu T_{s_k} = T_{s_k} theta^{s_k nu} + (q-1) G(nu), applied letter by letter.
      for (int k : mono.w.reduced_word()) {
        TLeftForm<R> next;
        for (const auto& [key, e] : acc) {
          const auto& [v, nu] = key;
          for (const auto& [p, f] : times_simple(v, k))
            accumulate(next, std::make_pair(p, reflect(k, nu)), R(e * f));
          for (const auto& [nu2, sign] : correction(k, nu))
            accumulate(next, std::make_pair(v, nu2), R(R(sign) * e * (q_ - R(1))));
        }
        acc = std::move(next);
      }
      for (const auto& [key, e] : acc) accumulate(out, key, e);
    }
    return out;
  }

 private:
  static Weight add(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
  }

  template <class Key>
  static void accumulate(std::map<Key, R>& map, const Key& key, const R& c) {
    if (branchcalc::is_zero(c)) return;
    auto [it, inserted] = map.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (branchcalc::is_zero(it->second)) map.erase(it);
    }
  }

  // T_{s_k} * x for x in normal form.
  HeckeElement<R> simple_times_element(int k, const HeckeElement<R>& x) const {
    HeckeElement<R> out(m_);
    for (const auto& [mono, c] : x.terms()) {
      const Weight swapped = reflect(k, mono.lambda);
      for (const auto& [p, f] : simple_times(k, mono.w)) out.add(swapped, p, R(c * f));
      for (const auto& [nu, sign] : correction(k, mono.lambda))
        out.add(nu, mono.w, R(R(sign) * c * (q_ - R(1))));
    }
    return out;
  }

  int m_;
  R q_;
};

// ---------------------------------------------------------------------------

struct RelationCheck {
  std::string name;
  bool passed = true;
  std::string detail;  ///< first violation, if any
};

struct RelationReport {
  int rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<RelationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Defining relations, braid relations and associativity on `trials` seeded
/// random monomial triples (weights in [-2, 2]).
template <class R>
RelationReport verify_relations(const HeckeAlgebra<R>& H, int trials, std::uint64_t seed) {
  const int m = H.rank();
  RelationReport report{m, trials, seed, {}};
  auto check = [&](const std::string& name, auto&& body) {
    RelationCheck c{name, true, {}};
    body(c);
    report.checks.push_back(std::move(c));
  };
  auto fail = [](RelationCheck& c, const std::string& what) {
    if (c.passed) c.detail = what;
    c.passed = false;
  };
  const R one(1);

  check("theta-commute", [&](RelationCheck& c) {
    for (int i = 1; i <= m; ++i) {
      if (H.multiply(H.theta(i), H.theta(i, -1)) != H.one())
        fail(c, "theta_" + std::to_string(i) + " * theta_" + std::to_string(i) + "^-1 != 1");
      for (int j = 1; j <= m; ++j)
        if (H.multiply(H.theta(i), H.theta(j)) != H.multiply(H.theta(j), H.theta(i)))
          fail(c, "theta_" + std::to_string(i) + " theta_" + std::to_string(j));
    }
  });
  check("T-theta", [&](RelationCheck& c) {
    for (int k = 1; k < m; ++k) {
      HeckeElement<R> lhs =
          H.multiply(H.T(k), H.theta(k)) - H.multiply(H.theta(k + 1), H.T(k));
      if (lhs != R(H.q() - one) * H.theta(k)) fail(c, "k=" + std::to_string(k));
    }
  });
  check("T-theta-far", [&](RelationCheck& c) {
    for (int k = 1; k < m; ++k)
      for (int j = 1; j <= m; ++j) {
        if (j == k || j == k + 1) continue;
        if (H.multiply(H.T(k), H.theta(j)) != H.multiply(H.theta(j), H.T(k)))
          fail(c, "k=" + std::to_string(k) + " j=" + std::to_string(j));
      }
  });
  check("quadratic", [&](RelationCheck& c) {
    for (int k = 1; k < m; ++k) {
      HeckeElement<R> a = H.T(k) - H.q() * H.one();
      HeckeElement<R> b = H.T(k) + H.one();
      if (!H.multiply(a, b).is_zero()) fail(c, "k=" + std::to_string(k));
    }
  });
  check("braid", [&](RelationCheck& c) {
    for (int k = 1; k + 1 < m; ++k) {
      auto l = H.multiply(H.multiply(H.T(k), H.T(k + 1)), H.T(k));
      auto r = H.multiply(H.multiply(H.T(k + 1), H.T(k)), H.T(k + 1));
      if (l != r) fail(c, "k=" + std::to_string(k));
    }
    for (int i = 1; i < m; ++i)
      for (int j = i + 2; j < m; ++j)
        if (H.multiply(H.T(i), H.T(j)) != H.multiply(H.T(j), H.T(i)))
          fail(c, "far i=" + std::to_string(i) + " j=" + std::to_string(j));
  });
  check("associativity", [&](RelationCheck& c) {
    std::mt19937_64 rng(seed);
    const auto perms = Permutation::all(m);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    auto random_monomial = [&] {
      Weight lambda(m);
      for (auto& x : lambda) x = coord(rng);
      return H.monomial(lambda, perms[pick(rng)]);
    };
    for (int t = 0; t < trials; ++t) {
      auto x = random_monomial();
      auto y = random_monomial();
      auto z = random_monomial();
      if (H.multiply(H.multiply(x, y), z) != H.multiply(x, H.multiply(y, z)))
        fail(c, "trial " + std::to_string(t));
    }
  });
  return report;
}

}  // namespace branchcalc
