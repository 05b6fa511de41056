#include "motivic/powstruct.hpp"

#include <set>

namespace motivic {

namespace {

// binom(a + n - 1, n) for n = 0..N, any integer a.
std::vector<Integer> rising_binomials(const Integer& a, int N) {
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Integer v = c[static_cast<std::size_t>(n) - 1] * (a + n - 1);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
    c[static_cast<std::size_t>(n)] = v;
  }
  return c;
}

Laurent require_laurent(const GClass& g, const char* what) {
  auto l = g.to_laurent();
  if (!l) throw Error(ErrorKind::NotLaurentPolynomial, std::string(what) + " " + g.to_string() + " is not a Laurent polynomial");
  return *l;
}

}  // namespace

LaurentSeries one_minus_t_pow(const Laurent& m, int N, const std::string& var) {
  std::vector<Laurent> acc(static_cast<std::size_t>(N) + 1, Laurent(0));
  acc[0] = Laurent(1);
  for (const auto& [j, a] : m.terms()) {
    // (1 - t L^j)^(-a) = sum_n binom(a+n-1, n) L^(jn) t^n
    const auto c = rising_binomials(a, N);
    std::vector<Laurent> f(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) f[static_cast<std::size_t>(n)] = Laurent::L_power(j * n, c[static_cast<std::size_t>(n)]);
    acc = LaurentSeries::dense_mul(acc, f, N);
  }
  return LaurentSeries::from_dense(var, N, acc);
}

ClassSeries one_minus_t_pow(const GClass& m, int N, const std::string& var) {
  return to_class_series(one_minus_t_pow(require_laurent(m, "exponent"), N, var));
}

LaurentSeries to_laurent_series(const ClassSeries& A) {
  return map_coeffs<Laurent>(A, [](const GClass& c) { return require_laurent(c, "coefficient"); });
}

ClassSeries to_class_series(const LaurentSeries& A) {
  return map_coeffs<GClass>(A, [](const Laurent& c) { return GClass(c); });
}

CycloFactorization factor_cyclo(const ClassSeries& A) {
  A.require_univariate("factor_cyclo");
  if (!A.constant_term().is_one())
    throw Error(ErrorKind::NonUnitLeadingTerm, "series must have constant term 1");
  const int N = A.trunc();
  LaurentSeries B = to_laurent_series(A);
  CycloFactorization out;
  out.trunc = N;
  for (int k = 1; k <= N; ++k) {
    const Laurent b = B.coeff(k);
    if (b.is_zero()) continue;
    out.factors.push_back({k, b});
    // Divide by (1 - t^k)^(-b), i.e. multiply by (1 - t^k)^b.
    B = B * stretch(one_minus_t_pow(-b, N / k, B.vars()[0]), k, N);
  }
  return out;
}

ClassSeries expand(const CycloFactorization& f, int N, const std::string& var) {
  LaurentSeries acc = LaurentSeries::one({var}, N);
  for (const auto& [k, b] : f.factors) {
    if (k > N) break;
    acc = acc * stretch(one_minus_t_pow(b, N / k, var), k, N);
  }
  return to_class_series(acc);
}

ClassSeries power(const ClassSeries& A, const GClass& m, int N) {
  const int n = std::min(N, A.trunc());
  const Laurent ml = require_laurent(m, "exponent");
  const auto f = factor_cyclo(A.truncated(n));
  LaurentSeries acc = LaurentSeries::one(A.vars(), n);
  if (ml.is_zero()) return to_class_series(acc);
  for (const auto& [k, b] : f.factors) acc = acc * stretch(one_minus_t_pow(ml * b, n / k, A.vars()[0]), k, n);
  return to_class_series(acc);
}

GClass sym_power_class(const GClass& m, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "symmetric power index must be nonnegative");
  return GClass(one_minus_t_pow(require_laurent(m, "exponent"), k).coeff(k));
}

void validate_partition(const MeasuredPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i].value.require_univariate("partition value");
    if (p[i].weight == 0) throw Error(ErrorKind::InvalidInput, "partition weights must be nonzero");
    if (p[i].value.order() < 1 || !p[i].value.constant_term().is_zero())
      throw Error(ErrorKind::NonPositiveOrderValue, "partition value " + p[i].value.to_string() + " has order 0");
    if (p[i].value.is_zero()) throw Error(ErrorKind::NonPositiveOrderValue, "partition value vanishes through its truncation");
    for (std::size_t j = 0; j < i; ++j)
      if (p[j].value.agrees_through(p[i].value, std::max(p[i].value.trunc(), p[j].value.trunc())))
        throw Error(ErrorKind::InvalidInput, "partition values must be distinct");
  }
}

namespace {

ClassSeries exp_integral_unchecked(const MeasuredPartition& p, int N, const std::string& var) {
  ClassSeries acc = ClassSeries::one({var}, N);
  for (const auto& [g, w] : p) {
    if (g.order() > N) continue;
    ClassSeries base = ClassSeries::one({var}, N) - g.as_exact(std::max(g.trunc(), N)).truncated(N);
    acc = acc * pow(base, -w);
  }
  return acc;
}

std::string var_of(const MeasuredPartition& p) { return p.empty() ? "t" : p.front().value.vars()[0]; }

ClassSeries exact_value(const ClassSeries& g, int N) {
  // Partition values are given as exact polynomials.
  return g.as_exact(N);
}

// prod_{k>=1} prod_g (1 - g^k)^(-w_g) via one merged exponential integral.
ClassSeries theorem3_lhs(const MeasuredPartition& p, int N, int stride) {
  const std::string var = var_of(p);
  MeasuredPartition merged;
  for (const auto& [g, w] : p) {
    const ClassSeries base = exact_value(g, N);
    const int ord = base.order();
    ClassSeries gk = pow(base, stride);
    for (int k = 1; static_cast<long>(k) * stride * ord <= N; ++k) {
      bool found = false;
      for (auto& e : merged) {
        if (e.value == gk) {
          e.weight += w;
          found = true;
          break;
        }
      }
      if (!found) merged.push_back({gk, w});
      gk = gk * pow(base, stride);
    }
  }
  std::erase_if(merged, [](const PartitionEntry& e) { return e.weight == 0; });
  return exp_integral_unchecked(merged, N, var);
}

}  // namespace

ClassSeries chi_exp_integral(const MeasuredPartition& p, int N) {
  validate_partition(p);
  MeasuredPartition exact;
  for (const auto& [g, w] : p) exact.push_back({exact_value(g, N), w});
  return exp_integral_unchecked(exact, N, var_of(p));
}

int moebius(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "moebius needs n >= 1");
  int result = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Theorem3Result theorem3_check(const MeasuredPartition& p, int N) {
  validate_partition(p);
  const std::string var = var_of(p);
  Theorem3Result r{theorem3_lhs(p, N, 1), ClassSeries::one({var}, N), false};
  for (int k = 1; k <= N; ++k) {
    for (const auto& [g, w] : p) {
      const ClassSeries gk = pow(exact_value(g, N), k);
      const int ord = gk.order();
      if (ord > N) continue;
      const auto c = rising_binomials(Integer(w), N / ord);
      std::vector<GClass> fiber(c.begin(), c.end());
      r.rhs = r.rhs * compose(ClassSeries::from_dense(var, N, fiber), gk);
    }
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

CorollaryResult corollary_check(const MeasuredPartition& p, int N) {
  validate_partition(p);
  const std::string var = var_of(p);
  CorollaryResult r{ClassSeries::one({var}, N), chi_exp_integral(p, N), false};
  int min_ord = N + 1;
  for (const auto& e : p) min_ord = std::min(min_ord, e.value.order());
  for (int k = 1; static_cast<long>(k) * min_ord <= N; ++k) {
    const int mu = moebius(k);
    if (mu == 0) continue;
    r.product = r.product * pow(theorem3_lhs(p, N, k), mu);
  }
  r.equal = r.product == r.first;
  return r;
}

IntegerSeries chi_image(const ClassSeries& A) {
  return map_coeffs<Integer>(A, [](const GClass& c) {
    const Rational v = c.euler_char();
    if (v.get_den() != 1) throw Error(ErrorKind::InvalidInput, "Euler characteristic is not an integer");
    return Integer(v.get_num());
  });
}

}  // namespace motivic
