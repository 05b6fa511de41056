#include <doctest.h>

#include <random>

#include "motivic/gclass.hpp"
#include "motivic/error.hpp"

using namespace motivic;

namespace {

const GClass L = GClass::L();

GClass random_class(std::mt19937_64& rng, bool laurent_only) {
  std::uniform_int_distribution<int> c(-3, 3);
  auto poly = [&](int lo, int hi) {
    GClass r;
    for (int e = lo; e <= hi; ++e) r += GClass(c(rng)) * GClass::L_power(e);
    return r;
  };
  GClass num = poly(-2, 3);
  if (laurent_only) return num;
  GClass den = poly(0, 2);
  if (den.is_zero()) den = GClass(1);
  return num / den;
}

// Horner evaluation of a Laurent polynomial given by (exponent, coeff) pairs.
Rational eval_terms(const std::vector<std::pair<int, long>>& terms, long q) {
  Rational s = 0;
  for (auto [e, c] : terms) {
    Rational p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= q;
    s += e >= 0 ? Rational(Rational(c) * p) : Rational(Rational(c) / p);
  }
  return s;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((L - 1) + 1 == L);
  CHECK((L + 1) * (L - 1) == L * L - 1);
  // (L^3 - 1) = (L - 1)(L^2 + L + 1) by long division.
  CHECK((L.pow(3) - 1) / (L - 1) == L * L + L + 1);
  CHECK_THROWS_AS(L / GClass(0), Error);
}

TEST_CASE("canonical form") {
  const GClass a = (L * L - 1) / (L - 1);
  CHECK(a == L + 1);
  CHECK(a.den() == IntPoly::constant(1));
  const GClass z = (L - L);
  CHECK(z.is_zero());
  CHECK(z.den() == IntPoly::constant(1));
  const GClass b = GClass(2) / (GClass(4) * L - 2);
  CHECK(b == GClass(1) / (2 * L - 1));
  CHECK(b.den().leading() > 0);
  CHECK(parse_class("L^-2 - L^-5").to_string() == "L^-2 - L^-5");
}

TEST_CASE("euler characteristic") {
  CHECK(parse_class("L - 1").euler_char() == 0);
  CHECK(parse_class("(L^3-1)/(L-1)").euler_char() == 3);
  try {
    (void)parse_class("1/(1-L^-2)").euler_char();
    FAIL("expected PoleAtOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOne);
  }
}

TEST_CASE("specialize") {
  CHECK(parse_class("L^2").specialize(3) == 9);
  CHECK(parse_class("(L+1)*(L-1)*L^-3").specialize(2) == Rational(3, 8));
  CHECK(parse_class("L^-2 - L^-5").specialize(2) == Rational(7, 32));
  CHECK(parse_class("L^-2 - L^-5").specialize(2) == eval_terms({{-2, 1}, {-5, -1}}, 2));
  CHECK_THROWS_AS(parse_class("1/(L-2)").specialize(2), Error);
}

TEST_CASE("virtual dimension") {
  CHECK(*L.pow(2).virtual_dim() == 2);
  CHECK(*parse_class("(L-1)*L^-3").virtual_dim() == -2);
  CHECK_FALSE(GClass(0).virtual_dim().has_value());
}

TEST_CASE("geometric sum") {
  const GClass s = geometric_sum(GClass::L_power(-6), GClass::L_power(-2));
  CHECK(s == GClass::L_power(-6) / (1 - GClass::L_power(-2)));
  CHECK(s == GClass::L_power(-4) / (L * L - 1));
  CHECK(geometric_sum(GClass(1), GClass(0)) == 1);
  try {
    (void)geometric_sum(GClass::L_power(-1), L);
    FAIL("expected DivergentSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentSeries);
  }
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const GClass a = random_class(rng, false), b = random_class(rng, false), c = random_class(rng, false);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GClass(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("specialize and euler characteristic are homomorphisms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const GClass a = random_class(rng, true), b = random_class(rng, true);
    for (long q : {2, 3, 5}) {
      CHECK((a * b).specialize(q) == a.specialize(q) * b.specialize(q));
      CHECK((a + b).specialize(q) == a.specialize(q) + b.specialize(q));
    }
    CHECK((a + b).euler_char() == a.euler_char() + b.euler_char());
    CHECK((a * b).euler_char() == a.euler_char() * b.euler_char());
  }
}

TEST_CASE("geometric sum against partial sums") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    GClass f = random_class(rng, true);
    if (f.is_zero()) f = 1;
    std::uniform_int_distribution<int> e(-3, -1);
    const GClass r = GClass(1 + i % 2) * GClass::L_power(e(rng)) - GClass::L_power(-5);
    const GClass s = geometric_sum(f, r);
    CHECK(s * (1 - r) == f);
    for (long q : {3, 5}) {
      Rational partial = 0, term = f.specialize(q);
      const Rational ratio = r.specialize(q);
      for (int k = 0; k < 80; ++k) {
        partial += term;
        term *= ratio;
      }
      // The tail is term / (1 - ratio).
      CHECK(s.specialize(q) - partial == term / (1 - ratio));
    }
  }
}
