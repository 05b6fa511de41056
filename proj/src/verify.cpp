#include "motivic/verify.hpp"

#include <numeric>
#include <random>
#include <set>

#include "motivic/genfun.hpp"
#include "motivic/lifting.hpp"
#include "motivic/powstruct.hpp"

namespace motivic {

namespace {

Check make(std::string name, bool pass, std::string detail = {}) { return {std::move(name), pass, std::move(detail)}; }

void append(std::vector<Check>& out, const std::string& prefix, const std::vector<Check>& in) {
  for (const auto& c : in) out.push_back(make(prefix + ": " + c.name, c.pass, c.detail));
}

std::vector<Check> theorem1_suite() {
  std::vector<Check> out;
  for (int k = 1; k <= 6; ++k) append(out, "example1 k=" + std::to_string(k), example1(k).checks);
  for (int k = 1; k <= 4; ++k) append(out, "example2 even k=" + std::to_string(k), example2(k, true).checks);
  for (int k = 2; k <= 4; ++k) append(out, "example2 odd k=" + std::to_string(k), example2(k, false).checks);
  append(out, "A1", example_a1().checks);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {5, 7}})
    append(out, "example3 (" + std::to_string(p) + "," + std::to_string(q) + ")", example3(p, q).checks);
  return out;
}

std::vector<Check> examples_suite() {
  std::vector<Check> out;
  append(out, "example2 sum", example2_sum().checks);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const auto r = example4(i, j);
      out.push_back(make("example4 a^" + std::to_string(i) + " b^" + std::to_string(j), r.equal, r.measure.to_string()));
    }
  return out;
}

std::vector<Check> fforacle_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  constexpr double kBound = 244140625.0;  // 5^12
  for (unsigned q : opt.field_checks)
    for (const auto& [name, s] : ff_suite(10)) {
      double size = 1;
      for (int i = 0; i < s.dim(); ++i) size *= q;
      if (size > kBound) continue;
      const auto count = ff_point_count(s, q);
      const Rational expect = stratum_class(s).specialize(q);
      out.push_back(make(name + " q=" + std::to_string(q), expect == Rational(Integer(std::to_string(count))),
                         std::to_string(count) + " vs " + expect.get_str()));
    }
  return out;
}

}  // namespace

std::vector<CorpusGerm> germ_corpus() {
  std::vector<CorpusGerm> out;
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; q <= 12; ++q)
      if (std::gcd(p, q) == 1)
        out.push_back({"t^" + std::to_string(p) + ",t^" + std::to_string(q), example3_germ(p, q)});
  out.push_back({"node", CurveGerm{{Branch::parse("t", "0"), Branch::parse("0", "t")}}});
  out.push_back({"tacnode", CurveGerm{{Branch::parse("t", "0"), Branch::parse("t", "t^2")}}});
  out.push_back({"three lines", example1_germ(3)});
  out.push_back({"E6 pair", example2_even_germ(2)});
  out.push_back({"A5 branches", example2_odd_germ(3)});
  out.push_back({"t^4,t^6+t^7", CurveGerm{{Branch::parse("t^4", "t^6+t^7")}}});
  out.push_back({"cusp and line", CurveGerm{{Branch::parse("t^2", "t^3"), Branch::parse("t", "0")}}});
  return out;
}

namespace {

std::vector<Check> curves_suite() {
  std::vector<Check> out;
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CurveGerm g = example3_germ(p, q);
      const PlanePoly f = PlanePoly::parse("y^" + std::to_string(p) + " - x^" + std::to_string(q));
      const long P = p_invariant(g), Pd = p_direct(g, f), d = delta(g);
      const std::string tag = "(t^" + std::to_string(p) + ",t^" + std::to_string(q) + ")";
      out.push_back(make(tag + " P", P == Pd && P == (p - 1) * q, std::to_string(P) + " / " + std::to_string(Pd)));
      out.push_back(make(tag + " delta", d == (p - 1) * (q - 1) / 2, std::to_string(d)));
    }
  for (const auto& c : germ_corpus()) {
    const auto f = correspondence_factor(c.germ);
    out.push_back(make(c.name + " correspondence factor", f.identity_holds, f.R.to_string()));
  }
  return out;
}

std::vector<Check> kouchnirenko_suite() {
  std::vector<Check> out;
  for (int p = 2; p <= 30; ++p)
    for (int q = p + 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long k = kouchnirenko_count(p, q);
      const Rational m = modality_formula(p, q);
      out.push_back(make("(" + std::to_string(p) + "," + std::to_string(q) + ")", m == Rational(k),
                         std::to_string(k) + " vs " + m.get_str()));
    }
  return out;
}

Laurent random_laurent(std::mt19937_64& rng, int lo, int hi, int amp) {
  std::uniform_int_distribution<int> c(-amp, amp);
  Laurent r;
  for (int e = lo; e <= hi; ++e) r += Laurent::L_power(e, Integer(c(rng)));
  return r;
}

ClassSeries random_unit(std::mt19937_64& rng, int N) {
  ClassSeries a = ClassSeries::one({"t"}, N);
  std::bernoulli_distribution keep(0.6);
  for (int i = 1; i <= N; ++i)
    if (keep(rng)) a.set(Exponent{i}, GClass(random_laurent(rng, -1, 1, 2)));
  return a;
}

std::vector<Check> power_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed);
  const int N = 10;
  const int count = opt.instances > 0 ? opt.instances : 200;
  const ClassSeries one = ClassSeries::one({"t"}, N);
  ClassSeries one_plus_t = one;
  one_plus_t.set(Exponent{1}, GClass(1));
  std::uniform_int_distribution<int> kd(2, 3);
  for (int i = 0; i < count; ++i) {
    const ClassSeries A = random_unit(rng, N), B = random_unit(rng, N);
    const GClass m(random_laurent(rng, -1, 2, 2)), n(random_laurent(rng, -1, 1, 2));
    const int k = kd(rng);
    const ClassSeries Am = power(A, m, N);
    bool ok = power(A, GClass(0), N) == one;
    ok = ok && power(A, GClass(1), N) == A;
    ok = ok && power(A * B, m, N) == Am * power(B, m, N);
    ok = ok && power(A, m + n, N) == Am * power(A, n, N);
    ok = ok && power(A, m * n, N) == power(power(A, n, N), m, N);
    ok = ok && power(one_plus_t, m, N).coeff(1) == m;
    ok = ok && power(stretch(A, k, N), m, N) == stretch(Am, k, N);
    out.push_back(make("axioms instance " + std::to_string(i), ok, "m = " + m.to_string()));
  }
  return out;
}

std::vector<Check> chi_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 1);
  const int N = 10;
  const int count = opt.instances > 0 ? opt.instances : 100;
  for (int i = 0; i < count; ++i) {
    const ClassSeries A = random_unit(rng, N);
    const GClass m(random_laurent(rng, -1, 2, 2));
    const IntegerSeries lhs = chi_image(power(A, m, N));
    const long cm = m.euler_char().get_num().get_si();
    const IntegerSeries rhs = pow(chi_image(A), cm);
    out.push_back(make("chi instance " + std::to_string(i), lhs == rhs, "chi(m) = " + std::to_string(cm)));
  }
  return out;
}

std::vector<Check> lifting_suite() {
  struct Case {
    const char* f;
    const char* x;
    const char* y;
    LiftMode mode;
  };
  const std::vector<Case> cases = {
      {"y^2 - x^3", "t^2", "t^3+t^9", LiftMode::Relaxed},
      {"y^2 - x^3 - x^4", "t^2", "t^3", LiftMode::Relaxed},
      {"y - x^2", "t", "t^2+t^5", LiftMode::Strict},
      {"y - x^2", "t", "t^2+t^40", LiftMode::Strict},
      {"y - x^2 - x^3", "t", "t^2", LiftMode::Strict},
      {"y", "t", "t^3", LiftMode::Strict},
  };
  const int target = 30;
  std::vector<Check> out;
  for (const auto& c : cases) {
    const PlanePoly f = PlanePoly::parse(c.f);
    const Branch g = Branch::parse(c.x, c.y);
    const std::string tag = std::string(c.f) + " at (" + c.x + ", " + c.y + ")";
    const LiftReport r = lift_arc(f, g, target, c.mode);
    const RationalSeries v = f.eval(r.lifted.x.truncated(target), r.lifted.y.truncated(target));
    out.push_back(make(tag + " vanishes mod t^31", v.is_zero() && v.trunc() >= target, v.to_string()));
    const bool jet = r.lifted.x.agrees_through(g.x.as_exact(target), r.n1) && r.lifted.y.agrees_through(g.y.as_exact(target), r.n1);
    out.push_back(make(tag + " jet agreement to n1", jet, "n1 = " + std::to_string(r.n1)));
    bool quad = true;
    std::string trace;
    for (std::size_t i = 0; i < r.iterations.size(); ++i) {
      trace += (i ? " " : "") + std::to_string(r.iterations[i].order);
      if (i + 1 < r.iterations.size() && !r.iterations[i + 1].vanished)
        quad = quad && r.iterations[i + 1].order >= 2 * (r.iterations[i].order - r.Q);
    }
    out.push_back(make(tag + " quadratic growth", quad, trace));
  }
  return out;
}

ClassSeries monomial_value(int exp, const GClass& c, int N) { return ClassSeries::monomial({"t"}, N, 0, exp, c); }

std::vector<Check> moebius_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 2);
  const int N = 12;
  std::uniform_int_distribution<int> exp_d(1, 4), w_d(-3, 3), size_d(1, 3);
  for (int inst = 0; inst < 3; ++inst) {
    MeasuredPartition p;
    const int sz = size_d(rng);
    std::set<std::pair<int, std::string>> seen;
    while (static_cast<int>(p.size()) < sz) {
      const int e = exp_d(rng);
      const GClass c(random_laurent(rng, -1, 1, 1));
      int w = w_d(rng);
      if (c.is_zero() || w == 0 || !seen.insert({e, c.to_string()}).second) continue;
      p.push_back({monomial_value(e, c, N), w});
    }
    const auto t3 = theorem3_check(p, N);
    out.push_back(make("theorem3 partition " + std::to_string(inst), t3.equal));
    const auto co = corollary_check(p, N);
    out.push_back(make("corollary partition " + std::to_string(inst), co.equal, co.first.to_string()));
  }
  return out;
}

// P(t) over arcs: prod_n (1 - t^n)^(-mu_n) with mu_n the measure of
// {ord y = n} modulo C*.
ClassSeries single_blowup_arc_side(int N) {
  const GClass L = GClass::L();
  ClassSeries acc = ClassSeries::one({"t"}, N);
  for (int n = 1; n <= N; ++n) {
    JetStratum s;
    s.ambient = Ambient::Arc;
    s.n = n;
    for (int i = 1; i < n; ++i) s.zero.insert(arc_coord('y', i, n));
    s.nonzero.insert(arc_coord('y', n, n));
    const GClass mu = measure_arc_stratum(s) / (L - 1);
    acc = acc * stretch(one_minus_t_pow(mu, N / n), n, N);
  }
  return acc;
}

std::vector<Check> genfun_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  const int N = std::max(3, std::min(opt.precision, 8));
  const ClassSeries P = pgen(single_blowup_resolution(), N);
  out.push_back(make("single blow-up against arc strata", P == single_blowup_arc_side(N), P.to_string()));
  for (const auto& [name, r] : std::vector<std::pair<std::string, ResolutionData>>{
           {"single blow-up", single_blowup_resolution()}, {"cusp", cusp_resolution()}}) {
    out.push_back(make(name + " euler characteristic image", chi_image(pgen(r, N)) == pgen_euler(r, N)));
    out.push_back(make(name + " order exact", pgen(r, N + 3).truncated(N) == pgen(r, N)));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1", "examples", "fforacle", "curves", "kouchnirenko",
                                                 "power",    "chi",      "lifting",  "moebius", "genfun"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& n : suite_names()) append(out, n, run_suite(n, opt));
    return out;
  }
  if (name == "theorem1") return theorem1_suite();
  if (name == "examples") return examples_suite();
  if (name == "fforacle") return fforacle_suite(opt);
  if (name == "curves") return curves_suite();
  if (name == "kouchnirenko") return kouchnirenko_suite();
  if (name == "power") return power_suite(opt);
  if (name == "chi") return chi_suite(opt);
  if (name == "lifting") return lifting_suite();
  if (name == "moebius") return moebius_suite(opt);
  if (name == "genfun") return genfun_suite(opt);
  throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace motivic
