#include <doctest.h>

#include <numeric>

#include "motivic/curves.hpp"

using namespace motivic;

namespace {

Branch br(const char* x, const char* y) { return Branch::parse(x, y); }
CurveGerm germ(std::initializer_list<Branch> b) { return CurveGerm{std::vector<Branch>(b)}; }

// Order of the equation of one branch along another branch; this is the
// intersection multiplicity when the equation is reduced.
int order_along(const char* f, const Branch& b) {
  const RationalSeries v = PlanePoly::parse(f).eval(b.at_level(64));
  return v.order();
}

}  // namespace

TEST_CASE("order") {
  CHECK(order_v(br("t^2", "t^3")) == 2);
  CHECK(order_v(br("t", "0")) == 1);
  CHECK(order_v(germ({br("t", "0"), br("0", "t"), br("t", "t")})) == 3);
}

TEST_CASE("blow-up") {
  BlowUp b = blow_up(br("t^2", "t^3"));
  CHECK(b.multiplicity == 2);
  CHECK(b.point == ExceptionalPoint{false, 0});
  CHECK(b.strict.x.as_exact(10) == parse_rational_series("t^2", "t", 10));
  CHECK(b.strict.y.as_exact(10) == parse_rational_series("t", "t", 10));
  b = blow_up(br("t", "t^2"));
  CHECK(b.multiplicity == 1);
  CHECK(b.strict.y.as_exact(10) == parse_rational_series("t", "t", 10));
  b = blow_up(br("t^4", "t^6+t^7"));
  CHECK(b.multiplicity == 4);
  CHECK(b.strict.y.as_exact(10) == parse_rational_series("t^2+t^3", "t", 10));
  b = blow_up(br("t^3", "t^2"));
  CHECK(b.point.infinity);
  b = blow_up(br("t", "3*t+t^2"));
  CHECK(b.point == ExceptionalPoint{false, 3});
}

TEST_CASE("multiplicity sequences") {
  CHECK(mult_sequence(br("t^2", "t^3")) == std::vector<int>{2});
  CHECK(mult_sequence(br("t", "t^2")).empty());
  const auto s = mult_sequence(br("t^3", "t^7"));
  long sum = 0;
  for (int m : s) sum += m * (m - 1) / 2;
  CHECK(sum == 6);
  CHECK(s == std::vector<int>{3, 3});
}

TEST_CASE("intersection multiplicity") {
  CHECK(intersection(br("t", "0"), br("0", "t")) == 1);
  CHECK(intersection(br("t", "t^2"), br("t", "-t^2")) == 2);
  CHECK(intersection(br("t^2", "t^3"), br("t", "0")) == 3);
  CHECK(intersection(br("t^2", "t^3"), br("t", "0")) == order_along("y^2 - x^3", br("t", "0")));
  // Against the equation of the other branch.
  const std::vector<std::pair<Branch, const char*>> with_eq = {
      {br("t^2", "t^3"), "y^2 - x^3"}, {br("t^3", "t^4"), "y^3 - x^4"}, {br("t", "t^2"), "y - x^2"}, {br("t^2", "t^5"), "y^2 - x^5"}};
  const std::vector<Branch> probes = {br("t", "0"), br("0", "t"), br("t", "t"), br("t^2", "2*t^3"), br("t^3", "t^5"), br("t", "t^3")};
  for (const auto& [b, f] : with_eq)
    for (const auto& p : probes) CHECK(intersection(b, p) == order_along(f, p));
  // Graphs over t meet with multiplicity ord(y1 - y2); the result is symmetric.
  const char* ys[] = {"t^2", "t^2+t^3", "t^2+2*t^3", "-t^2", "t^4", "t+t^5"};
  for (const char* a : ys)
    for (const char* b : ys) {
      if (std::string(a) == b) continue;
      const int d = (parse_rational_series(a, "t", 20) - parse_rational_series(b, "t", 20)).order();
      CHECK(intersection(br("t", a), br("t", b)) == d);
      CHECK(intersection(br("t", b), br("t", a)) == d);
    }
  CHECK_THROWS_AS(intersection(br("t", "t^2"), br("t", "t^2")), Error);
}

TEST_CASE("delta, milnor and P") {
  CHECK(delta(germ({br("t", "t^2")})) == 0);
  CHECK(delta(germ({br("t^2", "t^3")})) == 1);
  for (int k = 1; k <= 5; ++k) {
    CurveGerm g;
    for (int i = 0; i < k; ++i) g.branches.push_back(Branch::parse("t", std::to_string(i) + "*t"));
    CHECK(delta(g) == k * (k - 1) / 2);
    CHECK(p_invariant(g) == k * (k - 1));
  }
  CHECK(milnor(germ({br("t", "t^2")})) == 0);
  CHECK(milnor(germ({br("t^2", "t^3")})) == 2);
  CHECK(milnor(germ({br("t", "0"), br("0", "t")})) == 1);
  CHECK(p_invariant(germ({br("t", "0")})) == 0);
  CHECK(p_invariant(germ({br("t^2", "t^3")})) == 3);
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; p + q <= 14; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CurveGerm g = germ({Branch::parse("t^" + std::to_string(p), "t^" + std::to_string(q))});
      CHECK(delta(g) == (p - 1) * (q - 1) / 2);
      CHECK(p_invariant(g) == (p - 1) * q);
      CHECK(p_direct(g, PlanePoly::parse("y^" + std::to_string(p) + " - x^" + std::to_string(q))) == (p - 1) * q);
    }
}

TEST_CASE("direct P") {
  CHECK(p_direct(germ({br("t^2", "t^3")}), PlanePoly::parse("y^2 - x^3")) == 3);
  CHECK(p_direct(germ({br("t", "0"), br("0", "t")}), PlanePoly::parse("x*y")) == 2);
  CHECK(p_direct(germ({br("t", "0")}), PlanePoly::parse("y")) == 0);
  CHECK(p_direct(germ({br("t", "0"), br("0", "t")}), PlanePoly::parse("x*y")) == p_invariant(germ({br("t", "0"), br("0", "t")})));
  CHECK_THROWS_AS(p_direct(germ({br("t^2", "t^3")}), PlanePoly::parse("y^2 - x^5")), Error);
}

TEST_CASE("milnor additivity and blow-up drop") {
  const std::vector<Branch> bs = {br("t", "0"), br("0", "t"), br("t^2", "t^3"), br("t", "t^2"), br("t^3", "t^4"), br("t^2", "-t^5")};
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const long lhs = milnor(germ({bs[i], bs[j]}));
      const long rhs = milnor(germ({bs[i]})) + milnor(germ({bs[j]})) + 2 * intersection(bs[i], bs[j]) - 1;
      CHECK(lhs == rhs);
    }
  for (const auto& b : {br("t^2", "t^3"), br("t^3", "t^7"), br("t^4", "t^6+t^7"), br("t^3", "t^5"), br("t", "t^2")}) {
    const int v = order_v(b);
    CHECK(milnor(germ({b})) - milnor(germ({blow_up(b).strict})) == v * (v - 1));
  }
}

TEST_CASE("correspondence factor") {
  auto f = correspondence_factor(germ({br("t", "0")}));
  CHECK(f.R == GClass::L_power(-1));
  CHECK(f.identity_holds);
  f = correspondence_factor(germ({br("t^2", "t^3")}));
  CHECK(f.R == GClass::L_power(-3));
  CHECK(f.abstract_weight == GClass::L_power(-3));
  CHECK(f.theorem2_weight == GClass::L_power(-1));
  for (int k = 1; k <= 4; ++k) {
    CurveGerm g;
    for (int i = 0; i < k; ++i) g.branches.push_back(Branch::parse("t", std::to_string(i) + "*t"));
    const auto c = correspondence_factor(g);
    CHECK(c.R == GClass::L_power(k * (k - 1) / 2 - k - k * (k - 1)));
    CHECK(c.identity_holds);
  }
}

TEST_CASE("normalization") {
  const Branch b = Branch::make(parse_rational_series("t^2*(1+t)^2", "t", 12), parse_rational_series("t^3", "t", 12), false);
  const Normalized n = normalize(b);
  CHECK_FALSE(n.swapped);
  CHECK(n.branch.x.truncated(10) == parse_rational_series("t^2", "t", 10));
  // y(s) with t = reversion of s = t(1+t).
  const RationalSeries tinv = reversion(parse_rational_series("t+t^2", "t", 12));
  CHECK(n.branch.y.truncated(10) == compose(parse_rational_series("t^3", "t", 12), tinv).truncated(10));
  CHECK(normalize(br("t^2", "t^3")).branch.x.as_exact(8) == parse_rational_series("t^2", "t", 8));
  CHECK_THROWS_AS(normalize(br("2*t^2", "t^3")), Error);
}

TEST_CASE("degeneracy") {
  const auto w = degeneracy_witness(br("t^2", "t^4+t^6"));
  REQUIRE(w.has_value());
  CHECK(w->d == 2);
  // Composition reproduces the branch.
  CHECK(compose(w->xstar, w->h).truncated(12) == parse_rational_series("t^2", "t", 12));
  CHECK(compose(w->ystar, w->h).truncated(12) == parse_rational_series("t^4+t^6", "t", 12));
  CHECK_FALSE(is_degenerate(br("t^2", "t^3")));
  CHECK_FALSE(is_degenerate(br("t^4", "t^6+t^7")));
  CHECK(support_gcd(br("t^4", "t^6+t^7")) == 1);
  CHECK(support_gcd(br("t^2", "t^4+t^6")) == 2);
}
