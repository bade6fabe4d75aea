#include <doctest.h>

#include "branchcalc/errors.hpp"
#include "branchcalc/multisegment.hpp"
#include "oracle.hpp"

using namespace branchcalc;

namespace {

Segment seg(Exponent a, Exponent b, const std::string& line = "rho", int degree = 1) {
  return Segment(line, a, b, degree);
}

const Exponent h = half();

}  // namespace

TEST_CASE("exponent equality against integers") {
  CHECK(Exponent(0) == 0);
  CHECK(Exponent(4, 2) == 2);
  CHECK(h != 0);
  CHECK(0 != h);
  CHECK(parse_exponent("-1/2") == -h);
  CHECK(parse_exponent("7/4") == Exponent(7, 4));
  CHECK(to_string(Exponent(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_exponent("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_exponent("x"), SchemaError);
}

TEST_CASE("segment construction") {
  const Segment s = seg(0, 2);
  CHECK(s.rel_length() == 3);
  CHECK(seg(0, 2, "sigma", 2).abs_length() == 6);
  CHECK(seg(h, h).rel_length() == 1);
  CHECK_THROWS_AS(seg(1, 0), DomainError);
  CHECK_THROWS_AS(seg(0, h), DomainError);
  CHECK_THROWS_AS(seg(0, 1, "rho", 0), DomainError);
}

TEST_CASE("truncations of a single segment") {
  CHECK(truncate_right(seg(0, 2), 1) == seg(0, 1));
  CHECK_FALSE(truncate_right(seg(0, 2), 3).has_value());
  CHECK(truncate_right(seg(0, 2), 0) == seg(0, 2));
  CHECK(truncate_left(seg(0, 2), 1) == seg(1, 2));
  CHECK_FALSE(truncate_left(seg(h, h), 1).has_value());
  CHECK(truncate_left(seg(0, 2), 0) == seg(0, 2));
  CHECK(truncate(seg(0, 2), 2, Side::Left) == seg(2, 2));
  CHECK_THROWS_AS(truncate_right(seg(0, 2), 4), DomainError);
  CHECK_THROWS_AS(truncate_left(seg(0, 2), -1), DomainError);
}

TEST_CASE("linked pairs") {
  CHECK(linked(seg(0, 1), seg(1, 2)));
  CHECK_FALSE(linked(seg(0, 3), seg(1, 2)));
  CHECK(linked(seg(0, 1), seg(2, 3)));
  CHECK_FALSE(linked(seg(0, 1), seg(3, 4)));
  CHECK_FALSE(linked(seg(0, 1), seg(h, 3 * h)));
  CHECK_FALSE(linked(seg(0, 1), seg(1, 2, "sigma")));
  CHECK_FALSE(linked(seg(0, 1), seg(0, 1)));
  CHECK(linked(seg(1, 2), seg(0, 1)));
}

TEST_CASE("linked agrees with the point-set definition") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const Segment x = gen.segment("rho", 1, -2, 2, h);
    const Segment y = gen.segment(gen.coin() ? "rho" : "sigma", 1, -2, 2, h);
    CAPTURE(to_string(x));
    CAPTURE(to_string(y));
    CHECK(linked(x, y) == oracle::linked(x, y));
    CHECK(linked(x, y) == linked(y, x));
  }
}

TEST_CASE("union and intersection") {
  auto [u1, i1] = union_intersection(seg(0, 1), seg(1, 2));
  CHECK(u1 == seg(0, 2));
  CHECK(i1 == seg(1, 1));
  auto [u2, i2] = union_intersection(seg(0, 1), seg(2, 3));
  CHECK(u2 == seg(0, 3));
  CHECK_FALSE(i2.has_value());
  auto [u3, i3] = union_intersection(seg(-1, 1), seg(0, 2));
  CHECK(u3 == seg(-1, 2));
  CHECK(i3 == seg(0, 1));
  CHECK_THROWS_AS(union_intersection(seg(0, 3), seg(1, 2)), DomainError);
}

TEST_CASE("union and intersection preserve the support") {
  oracle::Gen gen(12);
  int exercised = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Segment x = gen.segment("rho", 1, -3, 3, 1);
    const Segment y = gen.segment("rho", 1, -3, 3, 1);
    if (!linked(x, y)) continue;
    ++exercised;
    auto [u, i] = union_intersection(x, y);
    Multisegment before{x, y};
    Multisegment after{u};
    after.insert(i);
    CHECK(oracle::point_counts(before) == oracle::point_counts(after));
  }
  CHECK(exercised > 100);
}

TEST_CASE("supports") {
  const Support s = support(seg(0, 2, "L"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == CuspidalPoint{"L", 0});
  CHECK(s[2] == CuspidalPoint{"L", 2});
  const Support t = support(InducedRep(Flavor::St, Multisegment{seg(0, 1, "L")}, h));
  REQUIRE(t.size() == 2);
  CHECK(t[0].exponent == h);
  CHECK(t[1].exponent == 3 * h);
  CHECK(support(Multisegment{}).empty());
}

TEST_CASE("multisegments stay sorted") {
  Multisegment m{seg(2, 3), seg(0, 1), seg(0, 0)};
  CHECK(m[0] == seg(0, 0));
  CHECK(m[2] == seg(2, 3));
  CHECK(m.degree() == 5);
  CHECK(m.without(0) == Multisegment{seg(0, 1), seg(2, 3)});
  m.insert(std::optional<Segment>{});
  CHECK(m.size() == 3);
  CHECK(Multisegment{seg(0, 1, "sigma", 3)}.degree() == 6);
}

TEST_CASE("induced representations") {
  const InducedRep unit_st(Flavor::St, {}, h);
  const InducedRep unit_zel(Flavor::Zel, {});
  CHECK(unit_st == unit_zel);
  CHECK(unit_st.twist() == 0);
  CHECK(InducedRep(Flavor::St, {seg(0, 1)}) != InducedRep(Flavor::Zel, {seg(0, 1)}));
  CHECK(to_string(InducedRep(Flavor::St, {seg(0, 1)}, h)) == "nu^1/2.ST{rho[0,1]}");
}

TEST_CASE("line registry") {
  LineRegistry lines;
  lines.declare("rho", 2, "rho_dual");
  CHECK(lines.degree("rho") == 2);
  CHECK(lines.degree("rho_dual") == 2);
  CHECK(lines.dual("rho_dual") == "rho");
  CHECK(lines.degree("undeclared") == 1);
  CHECK(lines.dual("undeclared") == "undeclared");
  CHECK(lines.fresh_id("rho'_") == "rho'_1");
  lines.declare("rho'_1", 1);
  CHECK(lines.fresh_id("rho'_") == "rho'_2");
  CHECK_THROWS_AS(lines.declare("rho", 3), DomainError);
}

TEST_CASE("contragredient") {
  LineRegistry lines;
  lines.declare("pi", 2, "pi_dual");
  const InducedRep st(Flavor::St, {seg(0, 1, "L")});
  CHECK(dual(st, lines) == InducedRep(Flavor::St, {seg(-1, 0, "L")}));
  CHECK(dual(dual(st, lines), lines) == st);
  CHECK(dual(InducedRep(Flavor::St, {}), lines) == InducedRep(Flavor::St, {}));
  const InducedRep twisted(Flavor::Zel, {seg(0, 2, "pi", 2), seg(h, h, "L")}, h);
  const InducedRep d = dual(twisted, lines);
  CHECK(d.twist() == -h);
  CHECK(d.m() == Multisegment{seg(-2, 0, "pi_dual", 2), seg(-h, -h, "L")});
  CHECK(dual(d, lines) == twisted);
}
