#include <doctest.h>

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

}  // namespace

TEST_CASE("Zelevinsky segment derivatives") {
  CHECK(derive_zel_segment(seg(0, 1), 1, Side::Right) == FormalSum{zel({seg(0, 0)})});
  CHECK(derive_zel_segment(seg(0, 1), 1, Side::Left) == FormalSum{zel({seg(1, 1)})});
  CHECK(derive_zel_segment(seg(0, 1), 2, Side::Right).empty());
  CHECK(derive_zel_segment(seg(0, 1), 0, Side::Right) == FormalSum{zel({seg(0, 1)})});
  CHECK(derive_zel_segment(seg(0, 0), 1, Side::Left) == FormalSum{zel({})});
  CHECK(derive_zel_segment(seg(0, 1, "pi", 2), 2, Side::Right) == FormalSum{zel({seg(0, 0, "pi", 2)})});
  CHECK(derive_zel_segment(seg(0, 1, "pi", 2), 1, Side::Right).empty());
}

TEST_CASE("Steinberg segment derivatives") {
  CHECK(derive_st_segment(seg(-h, h), 1, Side::Right) == FormalSum{st({seg(h, h)})});
  CHECK(derive_st_segment(seg(-h, h), 1, Side::Left) == FormalSum{st({seg(-h, -h)})});
  CHECK(derive_st_segment(seg(-1, 1), 2, Side::Right) == FormalSum{st({seg(1, 1)})});
  CHECK(derive_st_segment(seg(0, 1, "pi", 2), 1, Side::Right).empty());
  CHECK(derive_st_segment(seg(0, 1, "pi", 2), 4, Side::Right) == FormalSum{st({})});
  CHECK(derive_st_segment(seg(0, 1), 3, Side::Right).empty());
}

TEST_CASE("Leibniz expansion examples") {
  CHECK(derive(st({seg(0, 0), seg(2, 2)}), 1, Side::Right) == FormalSum{st({seg(2, 2)}), st({seg(0, 0)})});
  const InducedRep rep = st({seg(0, 2), seg(1, 1, "sigma")}, h);
  CHECK(derive(rep, 0, Side::Left) == FormalSum{rep});
  CHECK(derive(zel({seg(0, 1), seg(3, 4)}), 2, Side::Right) == FormalSum{zel({seg(0, 0), seg(3, 3)})});
  CHECK(derive(rep, 1, Side::Right) ==
        FormalSum{st({seg(1, 2), seg(1, 1, "sigma")}, h), st({seg(0, 2)}, h)});
  CHECK(derive(rep, 5, Side::Right).empty());
  CHECK(derive(rep, -1, Side::Right).empty());
}

TEST_CASE("derivatives agree with the Leibniz oracle") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const Multisegment m = gen.multisegment(4, -1, 2, h, {"rho", "sigma"});
    const InducedRep rep(gen.coin() ? Flavor::St : Flavor::Zel, m, gen.coin() ? h : Exponent(0));
    const Side side = gen.coin() ? Side::Right : Side::Left;
    const int i = gen.uniform(0, rep.degree() + 1);
    CAPTURE(to_string(rep));
    CAPTURE(i);
    CHECK(derive(rep, i, side).terms() == oracle::derive(rep, i, side));
    for (const auto& t : derive(rep, i, side)) CHECK(t.degree() == rep.degree() - i);
  }
}

TEST_CASE("single-factor products match the segment operation") {
  for (const auto& s : {seg(0, 2), seg(-h, 3 * h), seg(0, 1, "pi", 2)})
    for (int i = 0; i <= 6; ++i)
      for (Side side : {Side::Left, Side::Right}) {
        CHECK(derive(st({s}), i, side) == derive_st_segment(s, i, side));
        CHECK(derive(zel({s}), i, side) == derive_zel_segment(s, i, side));
      }
}

TEST_CASE("Whittaker dimensions") {
  CHECK(whittaker_dim(zel({seg(0, 1)})) == 0);
  CHECK(whittaker_dim(st({seg(0, 0), seg(2, 2)})) == 1);
  CHECK(whittaker_dim(zel({seg(0, 0), seg(5, 5)})) == 1);
  CHECK(whittaker_dim(zel({})) == 1);
  CHECK_THROWS_AS(whittaker_dim(st({seg(0, 1), seg(1, 2)})), DomainError);
}

TEST_CASE("the full derivative counts Whittaker functionals") {
  UniverseSpec u;
  u.lo = 0;
  u.hi = 2;
  u.step = h;
  u.max_degree = 4;
  for (const auto& m : enumerate_multisegments(u)) {
    CAPTURE(to_string(m));
    const InducedRep z = zel(m);
    const FormalSum full = derive(z, z.degree(), Side::Right);
    CHECK(static_cast<int>(full.size()) == whittaker_dim(z));
    for (const auto& t : full) CHECK(t.is_unit());
    if (is_generic(m)) {
      const InducedRep s = st(m);
      CHECK(derive(s, s.degree(), Side::Right).size() == 1);
      CHECK(whittaker_dim(s) == 1);
    }
  }
}

TEST_CASE("derivative duality") {
  LineRegistry lines;
  CHECK(check_derivative_duality(st({seg(-h, h)}), 1, lines));
  CHECK(dual(derive(st({seg(-h, h)}), 1, Side::Right), lines) == FormalSum{st({seg(-h, -h)})});
  CHECK(check_derivative_duality(zel({seg(0, 3)}, h), 0, lines));

  lines.declare("pi", 2, "pi_dual");
  oracle::Gen gen(32);
  for (int trial = 0; trial < 300; ++trial) {
    Multisegment m = gen.multisegment(3, 0, 4, h);
    if (gen.coin()) m.insert(seg(0, gen.uniform(0, 1), "pi", 2));
    const InducedRep rep(gen.coin() ? Flavor::St : Flavor::Zel, m, gen.coin() ? h : Exponent(0));
    for (int i = 0; i <= rep.degree(); ++i) {
      CAPTURE(to_string(rep));
      CHECK(check_derivative_duality(rep, i, lines));
      // Self-dual lines only: the oracle contragredient applies.
      if (std::none_of(m.begin(), m.end(), [](const Segment& s) { return s.line() == "pi"; })) {
        auto lhs = oracle::derive(rep, i, Side::Right);
        for (auto& t : lhs) t = oracle::dual(t);
        std::sort(lhs.begin(), lhs.end());
        CHECK(lhs == oracle::derive(oracle::dual(rep), i, Side::Left));
      }
    }
  }
}
