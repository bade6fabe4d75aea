#include "branchcalc/hecke_module.hpp"

#include <algorithm>
#include <functional>

#include "branchcalc/linalg.hpp"

namespace branchcalc {

std::vector<RationalMatrix> FiniteModule::generators() const {
  std::vector<RationalMatrix> out = T;
  out.insert(out.end(), theta.begin(), theta.end());
  out.insert(out.end(), theta_inv.begin(), theta_inv.end());
  return out;
}

RationalMatrix FiniteModule::T_w(const Permutation& w) const {
  RationalMatrix out = RationalMatrix::Identity(dim(), dim());
  for (int k : w.reduced_word()) out = RationalMatrix(out * T[k - 1]);
  return out;
}

bool module_relations_hold(const FiniteModule& M) {
  const int n = M.dim();
  const RationalMatrix I = RationalMatrix::Identity(n, n);
  for (int i = 0; i < M.rank; ++i) {
    if (RationalMatrix(M.theta[i] * M.theta_inv[i]) != I) return false;
    for (int j = 0; j < M.rank; ++j)
      if (RationalMatrix(M.theta[i] * M.theta[j]) != RationalMatrix(M.theta[j] * M.theta[i]))
        return false;
  }
  const Rational qm1 = M.q - 1;
  for (int k = 0; k + 1 < M.rank; ++k) {
    const RationalMatrix& t = M.T[k];
    if (RationalMatrix((t - M.q * I) * (t + I)) != RationalMatrix::Zero(n, n)) return false;
    if (RationalMatrix(t * M.theta[k] - M.theta[k + 1] * t) != RationalMatrix(qm1 * M.theta[k]))
      return false;
    for (int j = 0; j < M.rank; ++j) {
      if (j == k || j == k + 1) continue;
      if (RationalMatrix(t * M.theta[j]) != RationalMatrix(M.theta[j] * t)) return false;
    }
    if (k + 2 < M.rank) {
      const RationalMatrix& u = M.T[k + 1];
      if (RationalMatrix(t * u * t) != RationalMatrix(u * t * u)) return false;
    }
  }
  return true;
}

namespace {

Rational character_value(const std::vector<Rational>& chi, const Weight& nu) {
  Rational out = 1;
  for (std::size_t i = 0; i < chi.size(); ++i) out *= power(chi[i], nu[i]);
  return out;
}

FiniteModule skeleton(const std::string& kind, int m, const Rational& q, int dim) {
  FiniteModule M;
  M.kind = kind;
  M.rank = m;
  M.q = q;
  M.T.assign(m - 1, RationalMatrix::Zero(dim, dim));
  M.theta.assign(m, RationalMatrix::Zero(dim, dim));
  M.theta_inv.assign(m, RationalMatrix::Zero(dim, dim));
  return M;
}

void require_nonzero_q(const Rational& q) {
  if (q == 0) throw DomainError("q must be nonzero");
}

}  // namespace

FiniteModule principal_series(int m, const std::vector<Rational>& chi, const Rational& q) {
  if (static_cast<int>(chi.size()) != m) throw DomainError("chi must have m coordinates");
  for (const auto& c : chi)
    if (c == 0) throw DomainError("chi has a zero coordinate");
  require_nonzero_q(q);

  const auto perms = Permutation::all(m);
  const int n = static_cast<int>(perms.size());
  FiniteModule M = skeleton("principal-series", m, q, n);
  for (const auto& w : perms) M.basis.push_back("T_" + to_string(w));
  auto position = [&](const Permutation& w) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), w) - perms.begin());
  };

  const HeckeAlgebra<Rational> H(m, q);
  auto fill = [&](RationalMatrix& target, const HeckeElement<Rational>& g) {
    for (int col = 0; col < n; ++col) {
      for (const auto& [key, c] : H.to_t_left(H.multiply(g, H.T(perms[col])))) {
        target(position(key.first), col) += c * character_value(chi, key.second);
      }
    }
  };
  for (int k = 1; k < m; ++k) fill(M.T[k - 1], H.T(k));
  for (int i = 1; i <= m; ++i) {
    fill(M.theta[i - 1], H.theta(i));
    fill(M.theta_inv[i - 1], H.theta(i, -1));
  }
  return M;
}

FiniteModule steinberg_module(int m, const Rational& q, const Rational& z) {
  require_nonzero_q(q);
  if (z == 0) throw DomainError("central character must be nonzero");
  FiniteModule M = skeleton("steinberg", m, q, 1);
  M.basis = {"St"};
  for (auto& t : M.T) t(0, 0) = -1;
  for (int i = 0; i < m; ++i) {
    M.theta[i](0, 0) = z * power(q, i);
    M.theta_inv[i](0, 0) = Rational(1) / M.theta[i](0, 0);
  }
  return M;
}

// ---------------------------------------------------------------------------
// Central quotient. A / (e_j - c_j) has the Groebner basis (lex, y_1 > ... > y_m,
// y_k = x_{m+1-k})
//   g_k = sum_{j=0}^{k} (-1)^j c_j h_{k-j}(y_k, ..., y_m),  leading term y_k^k.

namespace {

using Poly = std::map<Weight, Rational>;

void poly_add(Poly& p, const Weight& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Exponent vectors of total degree d in the x-coordinates 0..last.
void monomials_of_degree(int m, int last, int d, const std::function<void(const Weight&)>& visit) {
  Weight e(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == last) {
      e[pos] = remaining;
      visit(e);
      e[pos] = 0;
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      e[pos] = a;
      rec(pos + 1, remaining - a);
    }
    e[pos] = 0;
  };
  rec(0, d);
}

Poly groebner_element(int m, int k, const std::vector<Rational>& c) {
  Poly g;
  const int last = m - k;  // y_k .. y_m are x_{m-k} .. x_0 (0-based)
  for (int j = 0; j <= k; ++j) {
    const Rational coeff = (j % 2 ? Rational(-1) : Rational(1)) * c[j];
    monomials_of_degree(m, last, k - j, [&](const Weight& e) { poly_add(g, e, coeff); });
  }
  return g;
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& z) {
  std::vector<Rational> e(z.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : z)
    for (std::size_t j = z.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  return e;
}

}  // namespace

RationalVector reduce_in_quotient(const CentralQuotient& Q, const Weight& lambda) {
  const int m = Q.module.rank;
  std::vector<Rational> c(Q.elementary.size() + 1);
  c[0] = 1;
  for (std::size_t j = 0; j < Q.elementary.size(); ++j) c[j + 1] = Q.elementary[j];

  // Clear negative exponents with e_m = theta_1 ... theta_m, which acts as c_m.
  int shift = 0;
  for (int x : lambda) shift = std::max(shift, -x);
  Weight e = lambda;
  for (auto& x : e) x += shift;
  Poly p;
  poly_add(p, e, power(c[m], -shift));

  std::vector<Poly> g(m + 1);
  for (int k = 1; k <= m; ++k) g[k] = groebner_element(m, k, c);

  for (;;) {
    auto it = std::find_if(p.begin(), p.end(), [&](const auto& term) {
      for (int k = 1; k <= m; ++k)
        if (term.first[m - k] >= k) return true;
      return false;
    });
    if (it == p.end()) break;
    const Weight exps = it->first;
    const Rational coeff = it->second;
    int k = 1;
    while (exps[m - k] < k) ++k;
    Weight base = exps;
    base[m - k] -= k;
    for (const auto& [ge, gc] : g[k]) {
      Weight prod(m);
      for (int i = 0; i < m; ++i) prod[i] = base[i] + ge[i];
      poly_add(p, prod, -coeff * gc);
    }
  }

  RationalVector out = RationalVector::Zero(static_cast<Eigen::Index>(Q.monomials.size()));
  for (const auto& [exps, coeff] : p) {
    auto pos = std::lower_bound(Q.monomials.begin(), Q.monomials.end(), exps);
    out(pos - Q.monomials.begin()) = coeff;
  }
  return out;
}

CentralQuotient central_quotient(int m, const std::vector<Rational>& orbit, const Rational& q) {
  if (static_cast<int>(orbit.size()) != m) throw DomainError("orbit must have m coordinates");
  for (const auto& z : orbit)
    if (z == 0) throw DomainError("orbit has a zero coordinate");
  require_nonzero_q(q);

  CentralQuotient Q;
  Q.orbit = orbit;
  const auto e = elementary_symmetric(orbit);
  Q.elementary.assign(e.begin() + 1, e.end());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (orbit[i] == orbit[j]) Q.regular = false;

  // a_i <= m - i (1-based), listed in lexicographic order.
  Weight a(m, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      Q.monomials.push_back(a);
      return;
    }
    for (int v = 0; v <= m - 1 - pos; ++v) {
      a[pos] = v;
      rec(pos + 1);
    }
    a[pos] = 0;
  };
  rec(0);
  std::sort(Q.monomials.begin(), Q.monomials.end());

  const int n = static_cast<int>(Q.monomials.size());
  Q.module = skeleton("central-quotient", m, q, n);
  for (const auto& mono : Q.monomials) Q.module.basis.push_back("theta^" + to_string(mono));

  const HeckeAlgebra<Rational> H(m, q);
  for (int col = 0; col < n; ++col) {
    const Weight& lambda = Q.monomials[col];
    for (int k = 1; k < m; ++k)
      for (const auto& [nu, c] : sign_module_act(H, H.T(k), lambda))
        Q.module.T[k - 1].col(col) += c * reduce_in_quotient(Q, nu);
    for (int i = 0; i < m; ++i) {
      Weight up = lambda, down = lambda;
      ++up[i];
      --down[i];
      Q.module.theta[i].col(col) = reduce_in_quotient(Q, up);
      Q.module.theta_inv[i].col(col) = reduce_in_quotient(Q, down);
    }
  }
  return Q;
}

// ---------------------------------------------------------------------------

RationalMatrix sign_vectors(const FiniteModule& M) {
  const int n = M.dim();
  if (M.T.empty()) return RationalMatrix::Identity(n, n);
  std::vector<RationalMatrix> blocks;
  for (const auto& t : M.T) blocks.push_back(t + RationalMatrix::Identity(n, n));
  return nullspace(vstack(blocks, n));
}

int sign_isotypic_dim(const FiniteModule& M) { return static_cast<int>(sign_vectors(M).cols()); }

int generated_algebra_dim(const std::vector<RationalMatrix>& gens, int dim) {
  auto vec = [&](const RationalMatrix& x) {
    RationalMatrix v(dim * dim, 1);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) v(i * dim + j, 0) = x(i, j);
    return v;
  };
  std::vector<RationalMatrix> basis{RationalMatrix::Identity(dim, dim)};
  RationalMatrix span = vec(basis.front());
  for (std::size_t next = 0; next < basis.size(); ++next) {
    for (const auto& g : gens) {
      RationalMatrix y = g * basis[next];
      RationalMatrix trial = hstack({span, vec(y)}, dim * dim);
      if (rank(trial) > static_cast<int>(span.cols())) {
        span = std::move(trial);
        basis.push_back(std::move(y));
      }
    }
  }
  return static_cast<int>(basis.size());
}

RationalMatrix generated_submodule(const FiniteModule& M, const RationalMatrix& start) {
  const int n = M.dim();
  RationalMatrix span = column_basis(start);
  for (;;) {
    std::vector<RationalMatrix> blocks{span};
    for (const auto& g : M.generators()) blocks.push_back(g * span);
    RationalMatrix grown = column_basis(hstack(blocks, n));
    if (grown.cols() == span.cols()) return span;
    span = std::move(grown);
  }
}

RationalMatrix largest_submodule_in(const FiniteModule& M, const RationalMatrix& space) {
  RationalMatrix basis = column_basis(space);
  for (;;) {
    if (basis.cols() == 0) return basis;
    // Rows of `annihilator` cut out span(basis).
    const RationalMatrix annihilator = nullspace(basis.transpose()).transpose();
    if (annihilator.rows() == 0) return basis;
    std::vector<RationalMatrix> blocks;
    for (const auto& g : M.generators()) blocks.push_back(annihilator * g * basis);
    const RationalMatrix coeffs = nullspace(vstack(blocks, static_cast<int>(basis.cols())));
    if (coeffs.cols() == basis.cols()) return basis;
    basis = basis * coeffs;
  }
}

SignQuotientAnalysis analyze_sign_quotients(const FiniteModule& M) {
  const int n = M.dim();
  SignQuotientAnalysis out;
  out.dim = n;

  // y = sum_w (-q)^{-l(w)} T_w satisfies T_k y = -y and y^2 = P(q^{-1}) y.
  Rational poincare = 0;
  RationalMatrix y = RationalMatrix::Zero(n, n);
  for (const auto& w : Permutation::all(M.rank)) {
    const Rational scale = power(Rational(-M.q), -w.length());
    y += scale * M.T_w(w);
    poincare += power(M.q, -w.length());
  }
  if (poincare == 0)
    throw DomainError("singular parameter: q is a root of the Poincare polynomial of S_" +
                      std::to_string(M.rank));

  const RationalMatrix sign = sign_vectors(M);
  out.sign_isotypic_dim = static_cast<int>(sign.cols());
  out.generated_by_sign = out.sign_isotypic_dim > 0 && generated_submodule(M, sign).cols() == n;

  // A submodule meets the sign type trivially iff the sign projector kills it.
  const RationalMatrix free_part = largest_submodule_in(M, nullspace(y));
  out.sign_free_dim = static_cast<int>(free_part.cols());
  out.quotient_dim = n - out.sign_free_dim;

  if (out.quotient_dim > 0) {
    const RationalMatrix change = complete_basis(free_part);
    const RationalMatrix change_inv = inverse(change);
    std::vector<RationalMatrix> quotient_gens;
    for (const auto& g : M.generators()) {
      RationalMatrix conj = change_inv * g * change;
      quotient_gens.push_back(conj.bottomRightCorner(out.quotient_dim, out.quotient_dim));
    }
    out.quotient_irreducible =
        generated_algebra_dim(quotient_gens, out.quotient_dim) == out.quotient_dim * out.quotient_dim;
  }
  // With one sign line generating M, every proper submodule lies in the
  // sign-free part, so M / free_part is the only simple quotient and it carries the sign.
  out.unique_sign_quotient =
      out.generated_by_sign && out.sign_isotypic_dim == 1 && out.quotient_irreducible;
  return out;
}

}  // namespace branchcalc
