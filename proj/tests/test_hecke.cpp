#include <doctest.h>

#include "branchcalc/errors.hpp"
#include "branchcalc/hecke.hpp"
#include "branchcalc/hecke_module.hpp"
#include "branchcalc/linalg.hpp"
#include "oracle.hpp"

using namespace branchcalc;

namespace {

using HS = HeckeAlgebra<Symbolic>;
using HQ = HeckeAlgebra<Rational>;

const Symbolic q = Symbolic::q();

Rational r(long n, long d = 1) { return make_rational(n, d); }

template <class R>
HeckeElement<R> random_element(const HeckeAlgebra<R>& H, oracle::Gen& gen, int terms) {
  const auto perms = Permutation::all(H.rank());
  HeckeElement<R> x(H.rank());
  for (int k = 0; k < terms; ++k) {
    const auto& w = perms[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(perms.size()) - 1))];
    x.add(gen.weight(H.rank(), -2, 2), w, R(gen.uniform(-3, 3)));
  }
  return x;
}

// Matrix of theta^lambda T_w on a finite module.
RationalMatrix represent(const FiniteModule& M, const HeckeElement<Rational>& x) {
  RationalMatrix out = RationalMatrix::Zero(M.dim(), M.dim());
  for (const auto& [mono, c] : x.terms()) {
    RationalMatrix theta = RationalMatrix::Identity(M.dim(), M.dim());
    for (int i = 0; i < M.rank; ++i) {
      const auto& g = mono.lambda[static_cast<std::size_t>(i)] >= 0 ? M.theta[static_cast<std::size_t>(i)]
                                                                      : M.theta_inv[static_cast<std::size_t>(i)];
      for (int k = 0; k < std::abs(mono.lambda[static_cast<std::size_t>(i)]); ++k) theta = theta * g;
    }
    out += c * (theta * M.T_w(mono.w));
  }
  return out;
}

oracle::Poly poly(const SigmaVector<Symbolic>& v) { return oracle::Poly(v.begin(), v.end()); }

}  // namespace

TEST_CASE("permutations") {
  const auto all = Permutation::all(3);
  CHECK(all.size() == 6);
  CHECK(all.front().is_identity());
  int total_length = 0;
  for (const auto& w : all) {
    total_length += w.length();
    CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
    CHECK((w * w.inverse()).is_identity());
    Permutation rebuilt = Permutation::identity(3);
    for (int k : w.reduced_word()) rebuilt = rebuilt * Permutation::simple(3, k);
    CHECK(rebuilt == w);
  }
  CHECK(total_length == 9);
  CHECK(reflect(1, {1, 0, 2}) == Weight{0, 1, 2});
  CHECK(act(Permutation::simple(3, 2), {1, 0, 2}) == Weight{1, 2, 0});
  CHECK(to_string(Permutation::identity(2)) == "e");
  CHECK(to_string(Weight{1, -2}) == "(1,-2)");
}

TEST_CASE("Laurent polynomials in q") {
  const Symbolic p = (q - Symbolic(1)) * (q + Symbolic(1));
  CHECK(p == Symbolic::q(2) - Symbolic(1));
  CHECK(p.evaluate(r(4)) == r(15));
  CHECK((Symbolic::q(-1) * q) == Symbolic(1));
  CHECK((p - p).is_zero());
  CHECK(to_string(Symbolic::q(2) - Symbolic(1)) == "q^2 - 1");
}

TEST_CASE("generator-level relations") {
  const HS H(2, q);
  CHECK(H.multiply(H.T(1), H.T(1)) ==
        (q - Symbolic(1)) * H.T(1) + q * H.one());
  CHECK(H.multiply(H.T(1), H.theta(1)) ==
        H.multiply(H.theta(2), H.T(1)) + (q - Symbolic(1)) * H.theta(1));
  CHECK((H.multiply(H.theta(1), H.theta(2)) - H.multiply(H.theta(2), H.theta(1))).is_zero());
  CHECK(H.multiply(H.theta(1, -1), H.theta(1)) == H.one());

  const HS H3(3, q);
  const auto lhs = H3.multiply(H3.multiply(H3.T(1), H3.T(2)), H3.T(1));
  const auto rhs = H3.multiply(H3.multiply(H3.T(2), H3.T(1)), H3.T(2));
  CHECK(lhs == rhs);
}

TEST_CASE("commutation correction solves the defining division") {
  // (1 - theta^{-alpha}) G(lambda) = theta^lambda - theta^{s lambda}
  const HS H(3, q);
  oracle::Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = gen.uniform(1, 2);
    const Weight lambda = gen.weight(3, -3, 3);
    oracle::Poly g, lhs, rhs;
    for (const auto& [nu, c] : H.correction(k, lambda)) oracle::add_to(g, nu, Symbolic(c));
    for (const auto& [nu, c] : g) {
      oracle::add_to(lhs, nu, c);
      Weight shifted = nu;
      --shifted[static_cast<std::size_t>(k - 1)];
      ++shifted[static_cast<std::size_t>(k)];
      oracle::add_to(lhs, shifted, -c);
    }
    oracle::add_to(rhs, lambda, Symbolic(1));
    oracle::add_to(rhs, reflect(k, lambda), Symbolic(-1));
    CAPTURE(to_string(lambda));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relations and associativity with symbolic q") {
  for (int m = 1; m <= 3; ++m) {
    const auto report = verify_relations(HS(m, q), 60, 7);
    CAPTURE(m);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("sign module examples") {
  const HS H(2, q);
  CHECK(sign_module_act(H, H.T(1), Weight{0, 0}) == SigmaVector<Symbolic>{{{0, 0}, Symbolic(-1)}});
  CHECK(sign_module_act(H, H.T(1), Weight{1, 0}) ==
        SigmaVector<Symbolic>{{{0, 1}, Symbolic(-1)}, {{1, 0}, q - Symbolic(1)}});
  CHECK(sign_module_act(H, H.theta(2), Weight{1, 0}) == SigmaVector<Symbolic>{{{1, 1}, Symbolic(1)}});
  const HS H1(1, q);
  CHECK(sign_module_act(H1, H1.theta(1), Weight{4}) == SigmaVector<Symbolic>{{{5}, Symbolic(1)}});
  CHECK(parse_generator(H, "theta2^-1") == H.theta(2, -1));
  CHECK_THROWS_AS(parse_generator(H, "T2"), DomainError);
  CHECK_THROWS_AS(parse_generator(H, "S1"), SchemaError);
}

TEST_CASE("sign module matches the Demazure-Lusztig operators") {
  oracle::Gen gen(52);
  for (int m = 2; m <= 3; ++m) {
    const HS H(m, q);
    for (int trial = 0; trial < 150; ++trial) {
      const int k = gen.uniform(1, m - 1);
      SigmaVector<Symbolic> v;
      for (int t = 0; t < 3; ++t) v[gen.weight(m, -2, 2)] += Symbolic(gen.uniform(1, 3));
      CHECK(poly(sign_module_act(H, H.T(k), v)) == oracle::demazure_lusztig(k, poly(v)));
    }
  }
}

TEST_CASE("theta-left and T-left forms describe the same element") {
  const HQ H(3, r(4));
  oracle::Gen gen(53);
  const FiniteModule M = principal_series(3, {r(2), r(-3), r(5, 7)}, r(4));
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(H, gen, 3);
    RationalMatrix via_t_left = RationalMatrix::Zero(M.dim(), M.dim());
    for (const auto& [key, c] : H.to_t_left(x)) {
      const auto& [w, lambda] = key;
      HeckeElement<Rational> theta(3);
      theta.add(lambda, Permutation::identity(3), Rational(1));
      via_t_left += c * (M.T_w(w) * represent(M, theta));
    }
    CHECK(via_t_left == represent(M, x));
  }
}

TEST_CASE("principal series is a representation") {
  // Multiplication in the algebra against matrix products in the module.
  oracle::Gen gen(54);
  for (int m = 1; m <= 3; ++m) {
    const HQ H(m, r(4));
    std::vector<Rational> chi;
    for (int i = 0; i < m; ++i) chi.push_back(r(i + 2, 1 + i % 2));
    const FiniteModule M = principal_series(m, chi, r(4));
    CHECK(M.dim() == static_cast<int>(Permutation::all(m).size()));
    CHECK(module_relations_hold(M));
    for (int trial = 0; trial < 15; ++trial) {
      const auto x = random_element(H, gen, 2);
      const auto y = random_element(H, gen, 2);
      CHECK(represent(M, H.multiply(x, y)) == represent(M, x) * represent(M, y));
    }
  }
  const FiniteModule M1 = principal_series(1, {r(3)}, r(4));
  CHECK(M1.theta[0](0, 0) == r(3));
  CHECK_THROWS_AS(principal_series(2, {r(1), r(0)}, r(4)), DomainError);
  CHECK_THROWS_AS(principal_series(2, {r(1), r(2)}, r(0)), DomainError);
}

TEST_CASE("sign-isotypic multiplicity one") {
  CHECK(sign_isotypic_dim(principal_series(2, {r(1), r(3)}, r(4))) == 1);
  CHECK(sign_isotypic_dim(principal_series(3, {r(1), r(3), r(-5)}, r(4))) == 1);
  const FiniteModule St = steinberg_module(3, r(4), r(2));
  CHECK(module_relations_hold(St));
  CHECK(sign_isotypic_dim(St) == 1);
  const auto a = analyze_sign_quotients(St);
  CHECK(a.unique_sign_quotient);
}

TEST_CASE("central quotient at a regular orbit") {
  const CentralQuotient Q = central_quotient(2, {r(1), r(2)}, r(4));
  CHECK(Q.regular);
  CHECK(Q.module.dim() == 2);
  CHECK(Q.monomials == std::vector<Weight>{{0, 0}, {1, 0}});
  CHECK(module_relations_hold(Q.module));
  CHECK(sign_isotypic_dim(Q.module) == 1);

  // Symmetric functions of theta act by their values at the orbit.
  const RationalMatrix& t1 = Q.module.theta[0];
  const RationalMatrix& t2 = Q.module.theta[1];
  const RationalMatrix I = RationalMatrix::Identity(2, 2);
  CHECK(RationalMatrix(t1 + t2) == RationalMatrix(r(3) * I));
  CHECK(RationalMatrix(t1 * t2) == RationalMatrix(r(2) * I));

  // Irreducibility by hand: no eigenvector of T is stable under theta_1.
  const RationalMatrix& T = Q.module.T[0];
  for (const Rational& ev : {r(4), r(-1)}) {
    const RationalMatrix kernel = nullspace(RationalMatrix(T - ev * I));
    REQUIRE(kernel.cols() == 1);
    const RationalMatrix image = t1 * kernel;
    RationalMatrix both(2, 2);
    both << kernel, image;
    CHECK(rank(both) == 2);
  }
  const auto a = analyze_sign_quotients(Q.module);
  CHECK(a.dim == 2);
  CHECK(a.sign_isotypic_dim == 1);
  CHECK(a.generated_by_sign);
  CHECK(a.unique_sign_quotient);
}

TEST_CASE("central quotients of rank one and three") {
  const CentralQuotient Q1 = central_quotient(1, {r(5)}, r(4));
  CHECK(Q1.module.dim() == 1);
  CHECK(Q1.module.theta[0](0, 0) == r(5));
  const CentralQuotient Q3 = central_quotient(3, {r(1), r(2), r(3)}, r(4));
  CHECK(Q3.module.dim() == 6);
  CHECK(module_relations_hold(Q3.module));
  CHECK(sign_isotypic_dim(Q3.module) == 1);
  CHECK(analyze_sign_quotients(Q3.module).unique_sign_quotient);
  CHECK_FALSE(central_quotient(2, {r(1), r(1)}, r(4)).regular);
  CHECK_THROWS_AS(central_quotient(2, {r(0), r(1)}, r(4)), DomainError);
}

TEST_CASE("reduction in the central quotient is consistent with theta") {
  const CentralQuotient Q = central_quotient(3, {r(2), r(-1), r(1, 3)}, r(4));
  oracle::Gen gen(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Weight lambda = gen.weight(3, -2, 2);
    const int i = gen.uniform(0, 2);
    Weight next = lambda;
    ++next[static_cast<std::size_t>(i)];
    CHECK(RationalVector(Q.module.theta[static_cast<std::size_t>(i)] * reduce_in_quotient(Q, lambda)) ==
          reduce_in_quotient(Q, next));
  }
}

TEST_CASE("singular parameter") {
  // 1 + q^{-1} = 0 at q = -1: the sign idempotent does not exist.
  const FiniteModule M = principal_series(2, {r(1), r(3)}, r(-1));
  CHECK_THROWS_AS(analyze_sign_quotients(M), DomainError);
}
