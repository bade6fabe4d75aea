#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchcalc/hecke.hpp"
#include "branchcalc/rational.hpp"

namespace branchcalc {

// ---------------------------------------------------------------------------
// Sigma = H (x)_{H_S} sgn, free over A with basis theta^lambda (x) 1.

template <class R>
using SigmaVector = std::map<Weight, R>;

/// h . (theta^lambda (x) 1): multiply, then T_w -> (-1)^{l(w)}.
template <class R>
SigmaVector<R> sign_module_act(const HeckeAlgebra<R>& H, const HeckeElement<R>& h,
                               const Weight& lambda) {
  SigmaVector<R> out;
  const auto product = H.multiply(h, H.theta(lambda));
  for (const auto& [mono, c] : product.terms()) {
    R term = mono.w.length() % 2 ? R(-c) : c;
    auto [it, inserted] = out.try_emplace(mono.lambda, term);
    if (!inserted) {
      it->second += term;
      if (is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

template <class R>
SigmaVector<R> sign_module_act(const HeckeAlgebra<R>& H, const HeckeElement<R>& h,
                               const SigmaVector<R>& v) {
  SigmaVector<R> out;
  for (const auto& [lambda, c] : v) {
    for (const auto& [mu, d] : sign_module_act(H, h, lambda)) {
      R term = c * d;
      auto [it, inserted] = out.try_emplace(mu, term);
      if (!inserted) {
        it->second += term;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

/// Parses "T1", "theta2", "theta2^-1" into a generator of H.
template <class R>
HeckeElement<R> parse_generator(const HeckeAlgebra<R>& H, const std::string& name) {
  auto index = [&](const std::string& digits, int lo, int hi) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(digits, &used);
      if (used != digits.size()) throw SchemaError("");
    } catch (const std::exception&) {
      throw SchemaError("bad generator '" + name + "'");
    }
    if (k < lo || k > hi) throw DomainError("generator index out of range in '" + name + "'");
    return k;
  };
  if (name.rfind("theta", 0) == 0) {
    std::string rest = name.substr(5);
    int power = 1;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      if (rest.substr(caret) != "^-1") throw SchemaError("bad generator '" + name + "'");
      power = -1;
      rest = rest.substr(0, caret);
    }
    return H.theta(index(rest, 1, H.rank()), power);
  }
  if (name.rfind("T", 0) == 0) return H.T(index(name.substr(1), 1, H.rank() - 1));
  throw SchemaError("bad generator '" + name + "'; expected T<k>, theta<i> or theta<i>^-1");
}

// ---------------------------------------------------------------------------
// Finite-dimensional modules with q specialized to a rational.

struct FiniteModule {
  std::string kind;
  int rank = 0;
  Rational q;
  std::vector<std::string> basis;
  std::vector<RationalMatrix> T;          ///< T[k-1] represents T_{s_k}
  std::vector<RationalMatrix> theta;      ///< theta[i-1] represents theta_i
  std::vector<RationalMatrix> theta_inv;  ///< theta_i^{-1}

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<RationalMatrix> generators() const;
  /// T_w as the product along a reduced word.
  RationalMatrix T_w(const Permutation& w) const;
};

/// Checks the defining relations on the representing matrices.
bool module_relations_hold(const FiniteModule& M);

/// H (x)_A chi with basis T_w (x) 1, w in S_m in lexicographic order.
/// Throws DomainError for q = 0 or a zero coordinate of chi.
FiniteModule principal_series(int m, const std::vector<Rational>& chi, const Rational& q);

/// The one-dimensional twisted Steinberg module: T_k -> -1, theta_i -> z q^{i-1}.
FiniteModule steinberg_module(int m, const Rational& q, const Rational& z);

struct CentralQuotient {
  FiniteModule module;
  std::vector<Rational> orbit;
  std::vector<Rational> elementary;  ///< e_1(orbit), ..., e_m(orbit)
  bool regular = true;               ///< pairwise distinct coordinates
  std::vector<Weight> monomials;     ///< basis exponents theta^a, a_i <= m - i
};

/// Sigma / J Sigma for J generated by e_j(theta) - e_j(orbit). Throws
/// DomainError for a zero orbit coordinate or q = 0.
CentralQuotient central_quotient(int m, const std::vector<Rational>& orbit, const Rational& q);

/// Coordinates of theta^lambda (x) 1 in the quotient basis.
RationalVector reduce_in_quotient(const CentralQuotient& Q, const Weight& lambda);

/// dim {v : T_{s_k} v = -v for all k}.
int sign_isotypic_dim(const FiniteModule& M);
/// Basis (columns) of the sign-isotypic subspace.
RationalMatrix sign_vectors(const FiniteModule& M);

/// Dimension of the associative algebra generated by the matrices (with 1).
int generated_algebra_dim(const std::vector<RationalMatrix>& gens, int dim);
/// Smallest invariant subspace containing the columns of `start`.
RationalMatrix generated_submodule(const FiniteModule& M, const RationalMatrix& start);
/// Largest invariant subspace contained in the column span of `space`.
RationalMatrix largest_submodule_in(const FiniteModule& M, const RationalMatrix& space);

struct SignQuotientAnalysis {
  int dim = 0;
  int sign_isotypic_dim = 0;
  bool generated_by_sign = false;  ///< M = H . (sign vectors)
  int sign_free_dim = 0;           ///< largest submodule meeting the sign type trivially
  int quotient_dim = 0;
  bool quotient_irreducible = false;  ///< absolutely irreducible (Burnside)
  bool unique_sign_quotient = false;
};

/// Irreducible quotients carrying the sign type. Throws DomainError when
/// sum_w q^{-l(w)} vanishes (sign idempotent undefined).
SignQuotientAnalysis analyze_sign_quotients(const FiniteModule& M);

}  // namespace branchcalc
