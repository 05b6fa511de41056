#include <doctest.h>

#include "motivic/json_io.hpp"

using namespace motivic;
using namespace motivic::io;

namespace {

const GClass L = GClass::L();

bool same_stratum(const JetStratum& a, const JetStratum& b) {
  return a.ambient == b.ambient && a.n == b.n && a.zero == b.zero && a.nonzero == b.nonzero && a.blocks.size() == b.blocks.size() &&
         a.multipliers == b.multipliers && measure(a) == measure(b);
}

}  // namespace

TEST_CASE("classes") {
  const GClass g = (L - 1) * (L + 2) / (L.pow(3) - 1);
  CHECK(class_from_json(to_json(g)) == g);
  CHECK(class_from_json(json::parse(to_json(g).dump())) == g);
  CHECK(class_from_json(json("L^-2 - L^-5")) == GClass::L_power(-2) - GClass::L_power(-5));
  CHECK(class_from_json(json(7)) == GClass(7));
  // Non-canonical input with a common factor.
  const json j = json::parse(R"({"num": [["-1", 0], ["1", 2]], "den": [["-1", 0], ["1", 1]]})");
  CHECK(class_from_json(j) == L + 1);
  CHECK(to_json(class_from_json(j)) == to_json(L + 1));
  CHECK_THROWS_AS(class_from_json(json::parse(R"({"num": [["1", -1]], "den": [["1", 0]]})")), Error);
  CHECK_THROWS_AS(class_from_json(json::parse(R"({"num": [["1", 0]], "den": []})")), Error);
}

TEST_CASE("coefficients") {
  CHECK(integer_from_json(coeff_to_json(Integer("123456789012345678901234567890"))) == Integer("123456789012345678901234567890"));
  CHECK(rational_from_json(coeff_to_json(Rational(-3, 7))) == Rational(-3, 7));
  CHECK(rational_from_json(json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(json("1/0")), Error);
}

TEST_CASE("series") {
  const ClassSeries a = parse_class_series("1 + L*t - (L-1)/(L+1)*t^3", "t", 6);
  CHECK(class_series_from_json(to_json(a)) == a);
  const RationalSeries r = parse_rational_series("1/2 + 3*t^2", "t", 4);
  CHECK(rational_series_from_json(to_json(r)) == r);
  IntegerSeries z = IntegerSeries::one({"a", "b"}, 3);
  z.set({1, 2}, Integer(-4));
  CHECK(integer_series_from_json(to_json(z)) == z);
  CHECK(class_series_from_json(json("1/(1-L*t)"), 4) == parse_class_series("1/(1-L*t)", "t", 4));
  CHECK_THROWS_AS(class_series_from_json(json::parse(R"({"vars": ["t"], "trunc": 3, "terms": [[[1, 2], 1]]})")), Error);
  // Repeated exponents are summed.
  const json dup = json::parse(R"({"vars": ["t"], "trunc": 3, "terms": [[[1], "2"], [[1], "3"]]})");
  CHECK(integer_series_from_json(dup).coeff(1) == 5);
}

TEST_CASE("branches and germs") {
  const CurveGerm g{{Branch::parse("t^2", "t^3"), Branch::parse("t", "-t^2 + 1/3*t^5")}};
  const CurveGerm back = germ_from_json(to_json(g));
  REQUIRE(back.branches.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.branches[i].exact == g.branches[i].exact);
    CHECK(back.branches[i].x.as_exact(12) == g.branches[i].x.as_exact(12));
    CHECK(back.branches[i].y.as_exact(12) == g.branches[i].y.as_exact(12));
  }
  const CurveGerm bare = germ_from_json(json::parse(R"([{"x": "t^2", "y": "t^3"}])"));
  CHECK(bare.branches.size() == 1);
  CHECK_THROWS_AS(branch_from_json(json::parse(R"({"x": "t", "y": "t^2", "exact": false})")), Error);
}

TEST_CASE("polynomials") {
  const PlanePoly f = PlanePoly::parse("y^2 - x^3 + 1/2*x*y");
  CHECK(poly_from_json(to_json(f)) == f);
  CHECK(poly_from_json(json("y^2 - x^3")) == PlanePoly::parse("y^2 - x^3"));
}

TEST_CASE("strata") {
  std::vector<JetStratum> ss = {a1_stratum(), example2_even_stratum(2), example3_stratum(3, 5), example4_stratum(2, 1),
                                example2_direct_stratum()};
  for (const auto& s : ss) CHECK(same_stratum(stratum_from_json(to_json(s)), s));
  const json named = json::parse(R"({"ambient": "function", "n": 2, "zero": ["a1_0", "a0_1"],
                                     "blocks": [{"kind": "squarefree_form", "degree": 2}]})");
  CHECK(same_stratum(stratum_from_json(named), a1_stratum()));
  const json arc = json::parse(R"({"ambient": "arc", "n": 2, "zero": ["x1"], "nonzero": ["y1"]})");
  const JetStratum s = stratum_from_json(arc);
  CHECK(s.zero == std::set<int>{arc_coord('x', 1, 2)});
  CHECK_THROWS_AS(stratum_from_json(json::parse(R"({"ambient": "arc", "n": 2, "zero": ["z1"]})")), Error);
  CHECK_THROWS_AS(stratum_from_json(json::parse(R"({"ambient": "arc", "n": 2, "zero": [9]})")), Error);
}

TEST_CASE("partitions") {
  const int N = 6;
  const MeasuredPartition p{{ClassSeries::monomial({"t"}, N, 0, 1, GClass::L_power(-1)), 3}, {ClassSeries::monomial({"t"}, N, 0, 2, L - 1), -2}};
  const MeasuredPartition back = partition_from_json(to_json(p), N);
  REQUIRE(back.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(back[i].value == p[i].value);
    CHECK(back[i].weight == p[i].weight);
  }
}

TEST_CASE("resolutions") {
  for (const auto& r : {single_blowup_resolution(), cusp_resolution()}) {
    const ResolutionData back = resolution_from_json(to_json(r));
    CHECK(back.intersections == r.intersections);
    CHECK(back.arrows == r.arrows);
    REQUIRE(back.components.size() == r.components.size());
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      CHECK(back.components[i].nu == r.components[i].nu);
      CHECK(back.components[i].euler_open_class == r.components[i].euler_open_class);
    }
  }
  const json bad = json::parse(R"({"components": [{"id": "E", "nu": 1, "euler_open_class": "L"}], "intersections": [[1]], "arrows": [["E", 0]]})");
  CHECK_THROWS_AS(resolution_from_json(bad), Error);
}

TEST_CASE("reports") {
  const json inv = to_json(invariants(CurveGerm{{Branch::parse("t^2", "t^3")}}));
  CHECK(inv["delta"] == 1);
  CHECK(inv["mu"] == 2);
  CHECK(inv["R"] == "L^-3");
  const json e = error_json(Error(ErrorKind::SingularMatrix, "x"));
  CHECK(e["error"] == "SingularMatrix");
  const json c = to_json(std::vector<Check>{{"a", true, ""}, {"b", false, "d"}});
  CHECK(c.size() == 2);
  CHECK(c[1]["pass"] == false);
}
