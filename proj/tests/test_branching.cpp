#include <doctest.h>

#include "branchcalc/branching.hpp"
#include "branchcalc/derivative.hpp"
#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"
#include "branchcalc/universe.hpp"
#include "oracle.hpp"

using namespace branchcalc;

namespace {

Segment seg(Exponent a, Exponent b, const std::string& line = "rho", int degree = 1) {
  return Segment(line, a, b, degree);
}

InducedRep st(Multisegment m, Exponent twist = 0) { return InducedRep(Flavor::St, std::move(m), twist); }
InducedRep zel(Multisegment m, Exponent twist = 0) { return InducedRep(Flavor::Zel, std::move(m), twist); }

const Exponent h = half();

std::vector<Exponent> exponents(const Support& s) {
  std::vector<Exponent> out;
  for (const auto& p : s) out.push_back(p.exponent);
  return out;
}

}  // namespace

TEST_CASE("filtration of the Steinberg representation of GL(2)") {
  const auto right = bz_filtration(st({seg(-h, h)}), Side::Right);
  REQUIRE(right.size() == 2);
  REQUIRE(right[0].payload.size() == 1);
  CHECK(right[0].payload.terms()[0] == st({seg(h, h)}, h));
  CHECK(exponents(support(right[0].payload.terms()[0])) == std::vector<Exponent>{1});
  CHECK(right[1].bottom);
  CHECK(right[1].payload == FormalSum{st({})});

  const auto left = bz_filtration(st({seg(-h, h)}), Side::Left);
  REQUIRE(left[0].payload.size() == 1);
  CHECK(exponents(support(left[0].payload.terms()[0])) == std::vector<Exponent>{-1});

  const auto single = bz_filtration(st({seg(3, 3)}), Side::Right);
  REQUIRE(single.size() == 1);
  CHECK(single[0].bottom);
  CHECK_THROWS_AS(bz_filtration(st({}), Side::Right), DomainError);
}

TEST_CASE("filtration layers lose one degree per step") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Multisegment m = gen.multisegment(4, 0, 3, h);
    if (m.empty()) continue;
    const InducedRep rep(gen.coin() ? Flavor::St : Flavor::Zel, m);
    const auto layers = bz_filtration(rep, gen.coin() ? Side::Left : Side::Right);
    REQUIRE(static_cast<int>(layers.size()) == rep.degree());
    for (std::size_t i = 0; i < layers.size(); ++i) {
      CHECK(layers[i].bottom == (i + 1 == layers.size()));
      for (const auto& t : layers[i].payload) CHECK(t.degree() == rep.degree() - 1 - static_cast<int>(i));
    }
    if (rep.flavor() == Flavor::Zel || is_generic(m))
      CHECK(static_cast<int>(layers.back().payload.size()) == whittaker_dim(rep));
  }
}

TEST_CASE("generic subquotients of Zelevinsky derivatives") {
  const Exponent c = 3;
  CHECK(generic_subquotients_of_derivative({seg(c, c + 1)}, 1, Side::Left) ==
        std::vector<Multisegment>{{seg(c + 1, c + 1)}});
  CHECK(generic_subquotients_of_derivative({seg(c, c + 1)}, 0, Side::Right).empty());
  CHECK(generic_subquotients_of_derivative({seg(0, 0), seg(2, 3)}, 1, Side::Right) ==
        std::vector<Multisegment>{{seg(0, 0), seg(2, 2)}});
  CHECK(generic_subquotients_of_derivative({seg(0, 2)}, 1, Side::Right).empty());
}

TEST_CASE("quotient obstruction examples") {
  for (Exponent c = -3; c <= 3; c += h) {
    const auto cert = quotient_obstruction(seg(-1, 1), {seg(c, c + 1)}, QuotientMode::Theorem);
    CAPTURE(to_string(c));
    CHECK(cert.obstructed);
    CHECK(cert.right.empty() == (c != h));
    CHECK(cert.left.empty() == (c != -3 * h));
  }
  CHECK(quotient_obstruction(seg(0, 2), {seg(0, 1)}).obstructed);
  CHECK_FALSE(quotient_obstruction(seg(0, 1), {seg(0, 0)}).obstructed);
  CHECK_THROWS_AS(quotient_obstruction(seg(0, 1), {seg(0, 0)}, QuotientMode::Theorem), DomainError);
  CHECK_THROWS_AS(quotient_obstruction(seg(0, 2), {seg(0, 0)}), DomainError);
}

TEST_CASE("point counts on shared lines") {
  CHECK(m_count({seg(0, 2)}, {seg(5, 5)}) == 3);
  CHECK(m_count({seg(0, 2)}, {seg(5, 5, "sigma")}) == 0);
  CHECK(m_count({}, {seg(0, 0)}) == 0);
  CHECK(m_count({seg(0, 1, "pi", 2), seg(0, 0)}, {seg(1, 1, "pi", 2)}) == 2);
}

TEST_CASE("ext certificate examples") {
  LineRegistry lines;
  const auto cert = ext_vanishing_certificate({seg(-1, 1)}, {seg(h, 3 * h)}, lines);
  CHECK_FALSE(has_fail(cert.root));
  CHECK(depth(cert.root) == 3);
  REQUIRE(cert.root.children.size() == 1);
  const Certificate& second = cert.root.children[0];
  CHECK(second.m1 == Multisegment{seg(0, 1), seg(0, 0, "rho'_1")});
  CHECK(second.variant == Side::Left);
  REQUIRE(cert.root.fresh_line.has_value());
  CHECK(cert.root.fresh_line->id == "rho'_1");
  CHECK(cert.lines.contains("rho'_3"));

  const auto base = ext_vanishing_certificate({seg(0, 1)}, {seg(0, 0, "sigma")}, lines);
  CHECK(base.root.kind == CertificateKind::Base);
  CHECK(depth(base.root) == 0);

  CHECK_THROWS_AS(ext_vanishing_certificate({seg(0, 1), seg(1, 2)}, {seg(0, 0)}, lines), DomainError);
  CHECK_THROWS_AS(ext_vanishing_certificate({seg(0, 1)}, {seg(0, 0), seg(1, 1)}, lines), DomainError);
}

TEST_CASE("fresh lines inherit the degree of the displaced segment") {
  LineRegistry lines;
  lines.declare("pi", 2);
  const auto cert = ext_vanishing_certificate({seg(0, 1, "pi", 2)}, {seg(h, h, "pi", 2)}, lines);
  REQUIRE(cert.root.fresh_line.has_value());
  CHECK(cert.root.fresh_line->degree == 2);
  CHECK_FALSE(has_fail(cert.root));
}

TEST_CASE("fast verdict agrees with the certificate tree") {
  UniverseSpec u;
  u.lo = 0;
  u.hi = 2;
  u.step = h;
  u.max_degree = 4;
  const auto all = enumerate_multisegments(u);
  LineRegistry lines;
  CertifyOptions options;
  options.require_generic_m2 = false;
  options.record_witnesses = false;
  int pairs = 0, fails = 0;
  for (const auto& m2 : all) {
    if (m2.degree() > 3) continue;
    const PackedSpectra packed(m2);
    REQUIRE(packed.packable());
    const SpectraTable table(m2);
    for (const auto& m1 : all) {
      if (m1.degree() != m2.degree() + 1 || !is_generic(m1)) continue;
      for (DeltaChoice choice : {DeltaChoice::Shortest, DeltaChoice::Longest}) {
        options.delta_choice = choice;
        const auto slow = ext_vanishing_certificate(m1, table, lines, options);
        const auto fast = ext_vanishing_verdict(m1, packed, choice);
        CAPTURE(to_string(m1));
        CAPTURE(to_string(m2));
        const Certificate* fail = first_fail(slow.root);
        CHECK(fast.fail == (fail != nullptr));
        if (fail) CHECK(fast.fail_delta == fail->delta);
        if (!fail) CHECK(fast.depth == depth(slow.root));
        ++pairs;
        fails += fast.fail;
      }
    }
  }
  CHECK(pairs > 1000);
  CHECK(fails > 0);
}

TEST_CASE("no FAIL node on generic pairs in a small window") {
  UniverseSpec u;
  u.lo = 0;
  u.hi = 2;
  u.step = h;
  u.max_degree = 4;
  u.generic_only = true;
  const auto all = enumerate_multisegments(u);
  LineRegistry lines;
  for (const auto& m2 : all) {
    if (m2.degree() > 3) continue;
    const SpectraTable table(m2);
    for (const auto& m1 : all) {
      if (m1.degree() != m2.degree() + 1) continue;
      CAPTURE(to_string(m1));
      CAPTURE(to_string(m2));
      CHECK_FALSE(has_fail(ext_vanishing_certificate(m1, table, lines).root));
    }
  }
}

TEST_CASE("the FAIL extractor returns linked segments of m2") {
  LineRegistry lines;
  CertifyOptions options;
  options.require_generic_m2 = false;
  oracle::Gen gen(42);
  int fails = 0;
  for (int trial = 0; trial < 40000 && fails < 200; ++trial) {
    const Multisegment m2 = gen.multisegment(3, 0, 2, h);
    if (oracle::is_generic(m2)) continue;
    const Multisegment m1 = gen.multisegment(3, 0, 2, h);
    if (m1.degree() != m2.degree() + 1 || !oracle::is_generic(m1)) continue;
    const auto cert = ext_vanishing_certificate(m1, m2, lines, options);
    const Certificate* fail = first_fail(cert.root);
    if (!fail) continue;
    ++fails;
    REQUIRE(fail->linked_pair.has_value());
    const auto& [s1, s2] = *fail->linked_pair;
    CAPTURE(to_string(m2));
    CHECK(oracle::linked(s1, s2));
    CHECK(std::find(m2.begin(), m2.end(), s1) != m2.end());
    CHECK(std::find(m2.begin(), m2.end(), s2) != m2.end());
    CHECK((fail->extraction == "truncation-argument" || fail->extraction == "recombination-scan"));
  }
  CHECK(fails > 20);
}

TEST_CASE("extract_linked_pair") {
  std::string how;
  const auto pair = extract_linked_pair(seg(0, 0), {seg(h, h), seg(-h, -h)}, &how);
  REQUIRE(pair.has_value());
  CHECK(linked(pair->first, pair->second));
  CHECK(how == "truncation-argument");
  CHECK_FALSE(extract_linked_pair(seg(0, 0), {seg(0, 0), seg(3, 3)}).has_value());
}

TEST_CASE("Euler-Poincare pairing") {
  CHECK(ep_pairing(st({seg(0, 0), seg(2, 2)}), st({seg(0, 1)})) == 1);
  CHECK(ep_pairing(st({seg(0, 1)}), zel({seg(0, 1)})) == 0);
  CHECK(ep_pairing(zel({seg(0, 1)}), zel({seg(0, 1)})) == 0);
  CHECK(ep_pairing(zel({seg(0, 0), seg(1, 1)}), st({seg(0, 1)})) == 1);
  CHECK_THROWS_AS(ep_pairing(st({seg(0, 1), seg(1, 2)}), st({})), DomainError);
}
