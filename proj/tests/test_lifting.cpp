#include <doctest.h>

#include "motivic/lifting.hpp"

using namespace motivic;

namespace {

Branch br(const char* x, const char* y) { return Branch::parse(x, y); }

int order_of_f(const PlanePoly& f, const Branch& b, int N) { return f.eval(b.x.truncated(N), b.y.truncated(N)).order(); }

void check_report(const PlanePoly& f, const Branch& g, const LiftReport& r, int target) {
  // Independent recomputation of every reported quantity.
  CHECK(order_of_f(f, r.lifted, target) > target);
  CHECK(r.lifted.x.agrees_through(g.x.as_exact(target), r.n1));
  CHECK(r.lifted.y.agrees_through(g.y.as_exact(target), r.n1));
  for (std::size_t i = 0; i + 1 < r.iterations.size(); ++i) {
    CHECK(r.iterations[i + 1].order > r.iterations[i].order);
    if (!r.iterations[i + 1].vanished) CHECK(r.iterations[i + 1].order >= 2 * (r.iterations[i].order - r.Q));
  }
  CHECK(r.n1 == r.m * r.n - r.Q);
}

}  // namespace

TEST_CASE("cusp with a perturbed jet") {
  const PlanePoly f = PlanePoly::parse("y^2 - x^3");
  const Branch g = br("t^2", "t^3+t^9");
  // n = 5 is not above 4Q = 12, so the strict hypothesis fails.
  try {
    (void)lift_arc(f, g, 30);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
  const LiftReport r = lift_arc(f, g, 30, LiftMode::Relaxed);
  CHECK(r.Q == 3);
  CHECK(r.m == 2);
  REQUIRE(r.iterations.size() >= 2);
  CHECK(r.iterations[0].order == 12);
  CHECK(r.iterations[1].order == 18);
  CHECK(r.lifted.x.truncated(30) == parse_rational_series("t^2", "t", 30));
  CHECK(r.lifted.y.truncated(30) == parse_rational_series("t^3", "t", 30));
  check_report(f, g, r, 30);
}

TEST_CASE("exact input is unchanged") {
  const PlanePoly f = PlanePoly::parse("y");
  const Branch g = br("t", "0");
  const LiftReport r = lift_arc(f, g, 30);
  CHECK(r.iterations.size() == 1);
  CHECK(r.lifted.y.truncated(30).is_zero());
  CHECK(r.lifted.x.truncated(30) == g.x.as_exact(30));
  const LiftReport again = lift_arc(PlanePoly::parse("y^2 - x^3"), br("t^2", "t^3"), 30, LiftMode::Relaxed);
  CHECK(again.lifted.y.truncated(30) == parse_rational_series("t^3", "t", 30));
}

TEST_CASE("smooth graph") {
  const PlanePoly f = PlanePoly::parse("y - x^2");
  const LiftReport far = lift_arc(f, br("t", "t^2+t^40"), 39);
  CHECK(far.lifted.y.truncated(39) == parse_rational_series("t^2", "t", 39));
  const LiftReport r = lift_arc(f, br("t", "t^2+t^5"), 30);
  CHECK(r.lifted.y.truncated(30) == parse_rational_series("t^2", "t", 30));
  check_report(f, br("t", "t^2+t^5"), r, 30);
  // y = x^2 + x^3 has the exact solution (t, t^2 + t^3).
  const PlanePoly h = PlanePoly::parse("y - x^2 - x^3");
  const LiftReport s = lift_arc(h, br("t", "t^2"), 30);
  CHECK(s.lifted.y.truncated(30) == parse_rational_series("t^2+t^3", "t", 30));
  check_report(h, br("t", "t^2"), s, 30);
}

TEST_CASE("non-polynomial solution") {
  // y^2 = x^3 (1 + x): y = t^3 (1 + t^2)^(1/2) on x = t^2.
  const PlanePoly f = PlanePoly::parse("y^2 - x^3 - x^4");
  const Branch g = br("t^2", "t^3");
  const LiftReport r = lift_arc(f, g, 30, LiftMode::Relaxed);
  check_report(f, g, r, 30);
  const RationalSeries root = nth_root_unit(parse_rational_series("1+t^2", "t", 30), 2);
  CHECK(r.lifted.y.truncated(30) == (parse_rational_series("t^3", "t", 30) * root).truncated(30));
}

TEST_CASE("hypothesis on f_y") {
  // Along (t^3, t^2) ord f_x = 3 is below ord f_y = 4.
  const PlanePoly f = PlanePoly::parse("x^2 - y^3");
  try {
    (void)lift_arc(f, br("t^3", "t^2+t^7"), 20, LiftMode::Relaxed);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("rotation") {
  const Rotation same = rotate_coords(PlanePoly::parse("y^2 - x^3"), br("t^2", "t^3"));
  CHECK(same.c == 0);
  CHECK(same.f == PlanePoly::parse("y^2 - x^3"));
  const Rotation r = rotate_coords(PlanePoly::parse("x^2 - y^3"), br("t^3", "t^2"));
  CHECK(r.c > 0);
  const int ox = r.f.dx().eval(r.g.at_level(20)).order();
  const int oy = r.f.dy().eval(r.g.at_level(20)).order();
  CHECK(oy == std::min(ox, oy));
  // The rotated equation still vanishes on the rotated branch.
  CHECK(r.f.eval(r.g.at_level(20)).is_zero());
}
