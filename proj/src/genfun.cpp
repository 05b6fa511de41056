#include "motivic/genfun.hpp"

#include <set>

#include "motivic/powstruct.hpp"

namespace motivic {

int ResolutionData::strict_count() const {
  int r = 0;
  for (const auto& [c, j] : arrows) r = std::max(r, j + 1);
  return r;
}

std::vector<Rational> leading_minors(const RationalMatrix& a) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    RationalMatrix m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    // Determinant by exact elimination.
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && sgn(m[p][c]) == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t i = c + 1; i < k; ++i) {
        const Rational f = m[i][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    out.push_back(det);
  }
  return out;
}

void ResolutionData::validate() const {
  const std::size_t n = components.size();
  if (intersections.size() != n) throw Error(ErrorKind::InvalidInput, "intersection matrix size differs from component count");
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (intersections[i].size() != n) throw Error(ErrorKind::InvalidInput, "intersection matrix is not square");
    if (components[i].nu < 1) throw Error(ErrorKind::InvalidInput, "nu must be at least 1");
    if (intersections[i][i] >= 0) throw Error(ErrorKind::InvalidInput, "self-intersections must be negative");
    for (std::size_t j = 0; j < n; ++j) {
      if (intersections[i][j] != intersections[j][i]) throw Error(ErrorKind::InvalidInput, "intersection matrix is not symmetric");
      if (i != j && intersections[i][j] < 0) throw Error(ErrorKind::InvalidInput, "distinct components meet nonnegatively");
      m[i][j] = intersections[i][j];
    }
  }
  const auto minors = leading_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = k % 2 == 0 ? -1 : 1;
    if (sgn(minors[k]) != expected) throw Error(ErrorKind::InvalidInput, "intersection matrix is not negative definite");
  }
  std::set<int> seen;
  for (const auto& [c, j] : arrows) {
    if (c < 0 || static_cast<std::size_t>(c) >= n) throw Error(ErrorKind::IndexOutOfRange, "arrow names an unknown component");
    if (j < 0) throw Error(ErrorKind::IndexOutOfRange, "strict transform index must be nonnegative");
    if (!seen.insert(j).second) throw Error(ErrorKind::InvalidInput, "a strict transform meets more than one component");
  }
  if (static_cast<int>(seen.size()) != strict_count())
    throw Error(ErrorKind::InvalidInput, "strict transform indices must be 0..r-1");
}

RationalMatrix invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m = a;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RationalMatrix inverse_intersection(const ResolutionData& r) {
  RationalMatrix m(r.components.size(), std::vector<Rational>(r.components.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = -r.intersections.at(i).at(j);
  return invert(m);
}

namespace {

// (1 - q)^(-e) with q a monomial, through total degree N.
LaurentSeries factor(const Exponent& exponent, const Laurent& scale, const Laurent& e,
                     const std::vector<std::string>& vars, int N) {
  const int d = total_degree(exponent);
  if (d <= 0) throw Error(ErrorKind::NonPositiveDegree, "monomial must have positive total degree");
  const LaurentSeries prim = one_minus_t_pow(e, N / d);
  return substitute_monomial(prim, vars, N, exponent, scale);
}

Laurent laurent_of(const GClass& g, const char* what) {
  auto l = g.to_laurent();
  if (!l) throw Error(ErrorKind::NotLaurentPolynomial, std::string(what) + " must be a Laurent polynomial");
  return *l;
}

Exponent scaled(const Exponent& e, int k) {
  Exponent r = e;
  for (int& x : r) x *= k;
  return r;
}

Exponent sum(const Exponent& a, const Exponent& b) {
  Exponent r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

LaurentSeries f_factor(const Exponent& ex, const Laurent& sc, const Laurent& e, const std::vector<std::string>& vars, int N) {
  LaurentSeries acc = LaurentSeries::one(vars, N);
  const int d = total_degree(ex);
  if (d <= 0) throw Error(ErrorKind::NonPositiveDegree, "monomial must have positive total degree");
  if (e.is_zero()) return acc;
  for (int k = 1; k * d <= N; ++k) acc = acc * factor(scaled(ex, k), sc.pow(static_cast<unsigned>(k)), e, vars, N);
  return acc;
}

LaurentSeries g_factor(const Exponent& ex, const Laurent& sx, const Exponent& ey, const Laurent& sy, const Laurent& e,
                       const std::vector<std::string>& vars, int N) {
  LaurentSeries acc = LaurentSeries::one(vars, N);
  const int dx = total_degree(ex), dy = total_degree(ey);
  if (dx <= 0 || dy <= 0) throw Error(ErrorKind::NonPositiveDegree, "monomial must have positive total degree");
  if (e.is_zero()) return acc;
  for (int k = 1; k * dx + dy <= N; ++k)
    for (int m = 1; k * dx + m * dy <= N; ++m)
      acc = acc * factor(sum(scaled(ex, k), scaled(ey, m)),
                         sx.pow(static_cast<unsigned>(k)) * sy.pow(static_cast<unsigned>(m)), e, vars, N);
  return acc;
}

}  // namespace

ClassSeries f_series(const Monomial& q, const std::vector<std::string>& vars, int N, const GClass& e) {
  if (q.exponent.size() != vars.size()) throw Error(ErrorKind::VariableMismatch, "monomial arity differs from variables");
  return to_class_series(f_factor(q.exponent, laurent_of(q.scale, "scale"), laurent_of(e, "exponent"), vars, N));
}

ClassSeries g_series(const Monomial& x, const Monomial& y, const std::vector<std::string>& vars, int N, const GClass& e) {
  if (x.exponent.size() != vars.size() || y.exponent.size() != vars.size())
    throw Error(ErrorKind::VariableMismatch, "monomial arity differs from variables");
  return to_class_series(g_factor(x.exponent, laurent_of(x.scale, "scale"), y.exponent, laurent_of(y.scale, "scale"),
                                  laurent_of(e, "exponent"), vars, N));
}

std::vector<std::string> pgen_vars(const ResolutionData& r) {
  const int n = r.strict_count();
  if (n <= 1) return {"t"};
  std::vector<std::string> v;
  for (int j = 1; j <= n; ++j) v.push_back("t" + std::to_string(j));
  return v;
}

std::vector<Exponent> component_exponents(const ResolutionData& r) {
  const RationalMatrix m = inverse_intersection(r);
  const int nv = std::max(1, r.strict_count());
  std::vector<Exponent> out(r.components.size(), Exponent(static_cast<std::size_t>(nv), 0));
  for (std::size_t s = 0; s < r.components.size(); ++s)
    for (const auto& [c, j] : r.arrows) {
      const Rational& v = m[s][static_cast<std::size_t>(c)];
      if (v.get_den() != 1) throw Error(ErrorKind::InvalidInput, "inverse intersection entry is not an integer");
      out[s][static_cast<std::size_t>(j)] = static_cast<int>(v.get_num().get_si());
    }
  return out;
}

namespace {

struct Factors {
  std::vector<std::string> vars;
  std::vector<Exponent> ex;
  std::vector<Laurent> scale;  // L^-(nu+1)
};

Factors prepare(const ResolutionData& r) {
  r.validate();
  Factors f{pgen_vars(r), component_exponents(r), {}};
  for (const auto& c : r.components) f.scale.push_back(Laurent::L_power(-(c.nu + 1)));
  return f;
}

Exponent unit(std::size_t n, int j) {
  Exponent e(n, 0);
  e[static_cast<std::size_t>(j)] = 1;
  return e;
}

}  // namespace

ClassSeries pgen(const ResolutionData& r, int N, PgenSign sign) {
  if (r.components.empty()) return ClassSeries::one({"t"}, N);
  const Factors f = prepare(r);
  const Laurent s = sign == PgenSign::Corrected ? Laurent(1) : Laurent(-1);
  const Laurent lm1 = s * (Laurent::L() - Laurent(1));
  LaurentSeries acc = LaurentSeries::one(f.vars, N);
  const std::size_t n = r.components.size();
  for (std::size_t i = 0; i < n; ++i)
    acc = acc * f_factor(f.ex[i], f.scale[i], s * laurent_of(r.components[i].euler_open_class, "class"), f.vars, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.intersections[i][j] > 0) acc = acc * g_factor(f.ex[i], f.scale[i], f.ex[j], f.scale[j], lm1, f.vars, N);
  for (const auto& [c, j] : r.arrows)
    acc = acc * g_factor(f.ex[static_cast<std::size_t>(c)], f.scale[static_cast<std::size_t>(c)],
                         unit(f.vars.size(), j), Laurent::L_power(-1), lm1, f.vars, N);
  return to_class_series(acc);
}

IntegerSeries pgen_euler(const ResolutionData& r, int N, PgenSign sign) {
  if (r.components.empty()) return IntegerSeries::one({"t"}, N);
  const Factors f = prepare(r);
  const long s = sign == PgenSign::Corrected ? 1 : -1;
  const IntegerSeries one = IntegerSeries::one(f.vars, N);
  auto mono = [&](const Exponent& e) {
    IntegerSeries m(f.vars, N);
    m.set(e, Integer(1));
    return m;
  };
  // prod (1 - x)^(-e) with ordinary integer powers.
  auto geometric = [&](const Exponent& e, long power) { return pow(one - mono(e), -power); };
  auto chi = [](const GClass& g) {
    const Rational v = g.euler_char();
    if (v.get_den() != 1) throw Error(ErrorKind::InvalidInput, "Euler characteristic is not an integer");
    return v.get_num().get_si();
  };
  const long chi_lm1 = s * chi(GClass::L() - 1);
  IntegerSeries acc = one;
  const std::size_t n = r.components.size();
  for (std::size_t i = 0; i < n; ++i) {
    const long e = s * chi(r.components[i].euler_open_class);
    const int d = total_degree(f.ex[i]);
    for (int k = 1; k * d <= N; ++k) acc = acc * geometric(scaled(f.ex[i], k), e);
  }
  auto g = [&](const Exponent& x, const Exponent& y) {
    const int dx = total_degree(x), dy = total_degree(y);
    for (int k = 1; k * dx + dy <= N; ++k)
      for (int m = 1; k * dx + m * dy <= N; ++m) acc = acc * geometric(sum(scaled(x, k), scaled(y, m)), chi_lm1);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.intersections[i][j] > 0) g(f.ex[i], f.ex[j]);
  for (const auto& [c, j] : r.arrows) g(f.ex[static_cast<std::size_t>(c)], unit(f.vars.size(), j));
  return acc;
}

ResolutionData single_blowup_resolution() {
  ResolutionData r;
  r.components = {{"E1", 1, GClass::L()}};
  r.intersections = {{-1}};
  r.arrows = {{0, 0}};
  return r;
}

ResolutionData cusp_resolution() {
  const GClass L = GClass::L();
  ResolutionData r;
  r.components = {{"E1", 1, L}, {"E2", 2, L}, {"E3", 4, L - 2}};
  r.intersections = {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}};
  r.arrows = {{2, 0}};
  return r;
}

}  // namespace motivic
