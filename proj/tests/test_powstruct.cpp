#include <doctest.h>

#include <random>

#include "motivic/powstruct.hpp"

using namespace motivic;

namespace {

const GClass L = GClass::L();

ClassSeries cs(const char* text, int N) { return parse_class_series(text, "t", N); }

// Partition numbers by the pentagonal recurrence.
std::vector<long> partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long s = k % 2 ? 1 : -1;
      p[m] += s * p[m - g1];
      if (g2 <= m) p[m] += s * p[m - g2];
    }
  return p;
}

int sieve_moebius(int n) {
  int r = 1;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return r;
}

Laurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  Laurent r;
  for (int e = -1; e <= 2; ++e) r += Laurent::L_power(e, Integer(c(rng)));
  return r;
}

ClassSeries random_unit(std::mt19937_64& rng, int N) {
  ClassSeries a = ClassSeries::one({"t"}, N);
  for (int i = 1; i <= N; ++i)
    if (rng() % 3) a.set(Exponent{i}, GClass(random_laurent(rng)));
  return a;
}

}  // namespace

TEST_CASE("primitive") {
  const ClassSeries one = one_minus_t_pow(GClass(1), 6);
  for (int k = 0; k <= 6; ++k) CHECK(one.coeff(k) == 1);
  const ClassSeries l = one_minus_t_pow(L, 6);
  for (int k = 0; k <= 6; ++k) CHECK(l.coeff(k) == L.pow(k));
  const ClassSeries l2 = one_minus_t_pow(L * L, 6);
  for (int k = 0; k <= 6; ++k) CHECK(l2.coeff(k) == L.pow(2 * k));
  // Negative coefficients give positive powers of 1 - t L^j.
  CHECK(one_minus_t_pow(-L + 2, 4) == cs("(1 - L*t) / (1-t)^2", 4));
  CHECK_THROWS_AS(one_minus_t_pow(GClass(1) / (L - 2), 4), Error);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const GClass m(random_laurent(rng));
    CHECK(one_minus_t_pow(m, 8) * one_minus_t_pow(-m, 8) == ClassSeries::one({"t"}, 8));
  }
}

TEST_CASE("cyclotomic factorization") {
  auto f = factor_cyclo(cs("1/(1-t)", 6));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].k == 1);
  CHECK(f.factors[0].b == Laurent(1));
  f = factor_cyclo(cs("1+t", 6));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].k == 1);
  CHECK(f.factors[0].b == Laurent(1));
  CHECK(f.factors[1].k == 2);
  CHECK(f.factors[1].b == Laurent(-1));
  f = factor_cyclo(cs("1/(1-L*t)", 6));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].b == Laurent::L());
  CHECK_THROWS_AS(factor_cyclo(cs("2+t", 4)), Error);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const ClassSeries a = random_unit(rng, 9);
    CHECK(expand(factor_cyclo(a), 9) == a);
  }
}

TEST_CASE("power examples") {
  const ClassSeries A = cs("1 + 2*t + L*t^3", 8);
  CHECK(power(A, GClass(0), 8) == ClassSeries::one({"t"}, 8));
  CHECK(power(A, GClass(1), 8) == A);
  // (1 + t) = (1 - t^2)/(1 - t), so (1 + t)^L = (1 - L t^2)/(1 - L t).
  const ClassSeries p = power(cs("1+t", 6), L, 6);
  CHECK(p == cs("(1 - L*t^2)/(1 - L*t)", 6));
  CHECK(p.coeff(1) == L);
  CHECK(p.coeff(2) == L * L - L);
  CHECK(p.coeff(3) == L.pow(3) - L * L);
  // Integer exponents agree with ordinary powers.
  CHECK(power(A, GClass(3), 8) == pow(A, 3));
  CHECK(power(A, GClass(-2), 8) == pow(A, -2));
}

TEST_CASE("symmetric power classes") {
  CHECK(sym_power_class(L * L, 3) == L.pow(6));
  CHECK(sym_power_class(L + 7, 0) == 1);
  CHECK(sym_power_class(L + 1, 2) == L * L + L + 1);
}

TEST_CASE("axioms on random inputs") {
  std::mt19937_64 rng(3);
  const int N = 8;
  for (int i = 0; i < 15; ++i) {
    const ClassSeries A = random_unit(rng, N), B = random_unit(rng, N);
    const GClass m(random_laurent(rng)), n(random_laurent(rng));
    CHECK(power(A * B, m, N) == power(A, m, N) * power(B, m, N));
    CHECK(power(A, m + n, N) == power(A, m, N) * power(A, n, N));
    CHECK(power(A, m * n, N) == power(power(A, n, N), m, N));
    CHECK(power(stretch(A, 2, N), m, N) == stretch(power(A, m, N), 2, N));
    CHECK(power(cs("1+t", N), m, N).coeff(1) == m);
  }
}

TEST_CASE("euler characteristic morphism") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const ClassSeries A = random_unit(rng, 8);
    const GClass m(random_laurent(rng));
    const long cm = m.euler_char().get_num().get_si();
    CHECK(chi_image(power(A, m, 8)) == pow(chi_image(A), cm));
  }
}

TEST_CASE("exponential integral") {
  auto mono = [](int e, long w, int N) { return PartitionEntry{ClassSeries::monomial({"t"}, N, 0, e, GClass(1)), w}; };
  CHECK(chi_exp_integral({mono(1, 1, 6)}, 6) == cs("1/(1-t)", 6));
  CHECK(chi_exp_integral({mono(1, -1, 6)}, 6) == cs("1-t", 6));
  CHECK(chi_exp_integral({mono(1, 1, 6), mono(2, 2, 6)}, 6) == cs("1/((1-t)*(1-t^2)^2)", 6));
  CHECK_THROWS_AS(chi_exp_integral({mono(0, 1, 6)}, 6), Error);
}

TEST_CASE("moebius") {
  for (int n = 1; n <= 200; ++n) CHECK(moebius(n) == sieve_moebius(n));
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
}

TEST_CASE("theorem 3 and the corollary") {
  const int N = 6;
  const MeasuredPartition p{{ClassSeries::monomial({"t"}, N, 0, 1, GClass(1)), 1}};
  const auto r = theorem3_check(p, N);
  const auto parts = partitions(N);
  for (int k = 0; k <= N; ++k) CHECK(r.lhs.coeff(k) == parts[static_cast<std::size_t>(k)]);
  CHECK(r.equal);
  const auto empty = theorem3_check({}, N);
  CHECK(empty.lhs == ClassSeries::one({"t"}, N));
  CHECK(empty.rhs == ClassSeries::one({"t"}, N));
  const auto c = corollary_check(p, N);
  CHECK(c.product == cs("1/(1-t)", N));
  CHECK(c.equal);
  const MeasuredPartition q{{ClassSeries::monomial({"t"}, 12, 0, 1, GClass::L_power(-1)), 3},
                            {ClassSeries::monomial({"t"}, 12, 0, 2, L - 1), -2}};
  CHECK(theorem3_check(q, 12).equal);
  CHECK(corollary_check(q, 12).equal);
}
