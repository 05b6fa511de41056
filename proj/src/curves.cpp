#include "motivic/curves.hpp"

#include <numeric>
#include <sstream>

#include "expr.hpp"

namespace motivic {

// ---------------------------------------------------------------- Branch

Branch Branch::make(RationalSeries x, RationalSeries y, bool exact) {
  x.require_univariate("branch");
  y.require_univariate("branch");
  if (x.vars() != y.vars()) throw Error(ErrorKind::VariableMismatch, "branch components use different variables");
  if (sgn(x.constant_term()) != 0 || sgn(y.constant_term()) != 0)
    throw Error(ErrorKind::InvalidInput, "branch must pass through the origin");
  const int t = std::min(x.trunc(), y.trunc());
  Branch b{exact ? x.as_exact(std::max(x.max_degree(), 1)) : x.truncated(t),
           exact ? y.as_exact(std::max(y.max_degree(), 1)) : y.truncated(t), exact};
  if (b.x.is_zero() && b.y.is_zero()) throw Error(ErrorKind::InvalidInput, "branch vanishes identically");
  if (exact) {
    const int n = std::max(b.max_degree(), 1);
    b.x = b.x.as_exact(n);
    b.y = b.y.as_exact(n);
  }
  return b;
}

Branch Branch::parse(const std::string& x, const std::string& y, bool exact) {
  // Polynomials only when exact; the truncation is lifted by make().
  constexpr int kParseTrunc = 4096;
  return make(parse_rational_series(x, "t", kParseTrunc), parse_rational_series(y, "t", kParseTrunc), exact);
}

Branch Branch::at_level(int n) const {
  if (exact) {
    const int m = std::max(n, max_degree());
    return Branch{x.as_exact(m), y.as_exact(m), true};
  }
  const int m = std::min(n, trunc());
  return Branch{x.truncated(m), y.truncated(m), false};
}

// ---------------------------------------------------------------- PlanePoly

PlanePoly::PlanePoly(Terms terms) {
  for (const auto& [e, c] : terms) add(e, c);
  if (terms_.count({0, 0}) != 0) throw Error(ErrorKind::InvalidInput, "plane polynomial must vanish at the origin");
  for (const auto& [e, c] : terms_)
    if (e.first < 0 || e.second < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in plane polynomial");
}

void PlanePoly::add(std::pair<int, int> e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PlanePoly PlanePoly::parse(std::string_view text) {
  detail::ExprSemantics<PlanePoly> sem;
  sem.number = [](const Integer& k) {
    PlanePoly p;
    p.add({0, 0}, Rational(k));
    return p;
  };
  sem.symbol = [](std::string_view name) -> std::optional<PlanePoly> {
    PlanePoly p;
    if (name == "x") {
      p.add({1, 0}, 1);
    } else if (name == "y") {
      p.add({0, 1}, 1);
    } else {
      return std::nullopt;
    }
    return p;
  };
  sem.divide = [](const PlanePoly& a, const PlanePoly& b) {
    if (b.terms_.size() != 1 || b.terms_.begin()->first != std::pair{0, 0})
      throw Error(ErrorKind::InvalidInput, "plane polynomials may only be divided by constants");
    PlanePoly r;
    for (const auto& [e, c] : a.terms_) r.add(e, c / b.terms_.begin()->second);
    return r;
  };
  sem.power = [](const PlanePoly& a, long e) {
    if (e < 0) throw Error(ErrorKind::InvalidInput, "negative power in plane polynomial");
    PlanePoly r;
    r.add({0, 0}, 1);
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
  };
  PlanePoly p = detail::ExprParser<PlanePoly>(text, sem).parse();
  return PlanePoly(p.terms_);
}

int PlanePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

PlanePoly PlanePoly::dx() const {
  PlanePoly r;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) r.add({e.first - 1, e.second}, c * e.first);
  return r;
}

PlanePoly PlanePoly::dy() const {
  PlanePoly r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r.add({e.first, e.second - 1}, c * e.second);
  return r;
}

RationalSeries PlanePoly::eval(const RationalSeries& x, const RationalSeries& y) const {
  x.require_same_vars(y);
  const int n = std::min(x.trunc(), y.trunc());
  int mi = 0, mj = 0;
  for (const auto& [e, c] : terms_) {
    mi = std::max(mi, e.first);
    mj = std::max(mj, e.second);
  }
  std::vector<RationalSeries> xp{RationalSeries::one(x.vars(), n)}, yp{RationalSeries::one(x.vars(), n)};
  for (int i = 1; i <= mi; ++i) xp.push_back(xp.back() * x);
  for (int j = 1; j <= mj; ++j) yp.push_back(yp.back() * y);
  RationalSeries r(x.vars(), n);
  for (const auto& [e, c] : terms_) r += c * (xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)]);
  return r;
}

PlanePoly PlanePoly::shear(const Rational& c) const {
  PlanePoly r;
  for (const auto& [e, coef] : terms_) {
    const auto [i, j] = e;
    Integer binom = 1;
    Rational cp = 1;
    // (x + c y)^i = sum_l binom(i, l) x^(i-l) (c y)^l
    for (int l = 0; l <= i; ++l) {
      r.add({i - l, j + l}, coef * Rational(binom) * cp);
      binom = binom * (i - l) / (l + 1);
      cp *= c;
    }
  }
  return r;
}

PlanePoly PlanePoly::swapped() const {
  PlanePoly r;
  for (const auto& [e, c] : terms_) r.add({e.second, e.first}, c);
  return r;
}

PlanePoly PlanePoly::operator-() const {
  PlanePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

PlanePoly operator+(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

PlanePoly operator-(const PlanePoly& a, const PlanePoly& b) { return a + (-b); }

PlanePoly operator*(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

std::string PlanePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<std::pair<int, int>, Rational>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.first.first + a.first.second > b.first.first + b.first.second;
  });
  for (const auto& [e, c] : v) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) mono += std::string(mono.empty() ? "" : "*") + (e.second == 1 ? "y" : "y^" + std::to_string(e.second));
    if (mag != 1) {
      os << mag.get_str() << "*" << mono;
    } else {
      os << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- fixed-precision kernels

namespace {

constexpr int kExactCap = 256;

bool visible(const RationalSeries& s) { return s.order() <= s.trunc(); }

int level_order(const Branch& b) {
  const int vx = b.x.order(), vy = b.y.order();
  const int v = std::min(vx, vy);
  if (v > b.trunc()) throw Error(ErrorKind::PrecisionExhausted, "branch order not visible at working precision");
  return v;
}

BlowUp blow_up_at(const Branch& b) {
  const int T = b.trunc();
  const int vx = b.x.order(), vy = b.y.order();
  const int m = std::min(vx, vy);
  if (m > T) throw Error(ErrorKind::PrecisionExhausted, "branch order not visible at working precision");
  if (m >= T) throw Error(ErrorKind::PrecisionExhausted, "no precision left after blow-up");
  BlowUp out;
  out.multiplicity = m;
  if (vx <= vy) {
    const RationalSeries lead = b.x.shift_down(m);
    const bool monomial_divisor = b.exact && lead.terms().size() == 1;
    RationalSeries r = b.y.shift_down(m) * recip(lead);
    const Rational c = r.constant_term();
    r = r - RationalSeries::constant(r.vars(), r.trunc(), c);
    out.point = {false, c};
    out.strict = Branch{b.x.truncated(T - m), r, monomial_divisor};
  } else {
    const RationalSeries lead = b.y.shift_down(m);
    const bool monomial_divisor = b.exact && lead.terms().size() == 1;
    RationalSeries r = b.x.shift_down(m) * recip(lead);
    out.point = {true, 0};
    out.strict = Branch{r, b.y.truncated(T - m), monomial_divisor};
  }
  return out;
}

Normalized normalize_at(const Branch& b) {
  const int vx = b.x.order(), vy = b.y.order();
  Normalized out;
  out.swapped = vx > vy;
  Branch w = out.swapped ? Branch{b.y, b.x, b.exact} : b;
  const int a = std::min(vx, vy);
  const int T = w.trunc();
  if (a > T) throw Error(ErrorKind::PrecisionExhausted, "branch order not visible at working precision");
  if (w.x.terms().size() == 1 && w.x.coeff(a) == 1) {
    out.branch = w;
    return out;
  }
  const RationalSeries u = w.x.shift_down(a);
  const Rational c = u.constant_term();
  if (!rational_nth_root(c, static_cast<unsigned>(a)))
    throw Error(ErrorKind::NoRootInField, "leading coefficient " + c.get_str() + " has no rational " +
                                              std::to_string(a) + "-th root");
  const RationalSeries s = nth_root_unit(u, static_cast<unsigned>(a)).shift_up(1);
  const RationalSeries h = reversion(s);
  const int n = h.trunc();
  out.branch = Branch{RationalSeries::monomial(w.x.vars(), n, 0, a), compose(w.y, h).truncated(n), false};
  return out;
}

std::optional<DegeneracyWitness> degeneracy_at(const Branch& b) {
  const Branch nb = normalize_at(b).branch;
  const int a = nb.x.order();
  const auto& vars = nb.x.vars();
  const int vy = nb.y.order();
  if (vy > nb.y.trunc()) {
    if (a < 2) return std::nullopt;
    return DegeneracyWitness{a, RationalSeries::monomial(vars, nb.trunc(), 0, a),
                             RationalSeries::monomial(vars, nb.trunc(), 0, 1), RationalSeries(vars, nb.trunc())};
  }
  const int g = std::gcd(a, vy);
  for (int d = 2; d <= g; ++d) {
    if (g % d != 0) continue;
    const int e = a / d;
    // x* = s^e fixed; h^e = x solved order by order.
    const RationalSeries h = nth_root_unit(nb.x.shift_down(a), static_cast<unsigned>(e)).shift_up(d);
    RationalSeries residual = nb.y.truncated(h.trunc());
    std::vector<Rational> ystar(1, Rational(0));
    RationalSeries hp = h;  // h^i
    bool ok = true;
    for (int j = 1; j <= residual.trunc() && ok; ++j) {
      if (j % d == 0) {
        const int i = j / d;
        while (static_cast<int>(ystar.size()) <= i) ystar.emplace_back(0);
        while (hp.order() < j) hp = hp * h;
        const Rational yi = residual.coeff(j) / hp.coeff(j);
        ystar[static_cast<std::size_t>(i)] = yi;
        if (sgn(yi) != 0) residual = residual - yi * hp;
      } else if (sgn(residual.coeff(j)) != 0) {
        ok = false;
      }
    }
    if (!ok) continue;
    const int n = std::max(residual.trunc() / d, 1);
    std::vector<Rational> ys(ystar.begin(), ystar.end());
    if (static_cast<int>(ys.size()) > n + 1) ys.resize(static_cast<std::size_t>(n) + 1);
    return DegeneracyWitness{d, h, RationalSeries::monomial(vars, n, 0, e), RationalSeries::from_dense(vars[0], n, ys)};
  }
  return std::nullopt;
}

std::vector<int> mult_sequence_at(const Branch& b0) {
  if (degeneracy_at(b0)) throw Error(ErrorKind::DegenerateBranch, "branch factors through a reparametrization of order >= 2");
  std::vector<int> seq;
  Branch b = b0;
  while (level_order(b) > 1) {
    BlowUp bu = blow_up_at(b);
    seq.push_back(bu.multiplicity);
    b = std::move(bu.strict);
  }
  return seq;
}

int intersection_at(const Branch& a0, const Branch& b0) {
  Branch a = a0, b = b0;
  int sum = 0;
  bool both_smooth = false;
  for (;;) {
    BlowUp ba, bb;
    try {
      const int va = level_order(a), vb = level_order(b);
      both_smooth = va == 1 && vb == 1;
      ba = blow_up_at(a);
      bb = blow_up_at(b);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PrecisionExhausted && both_smooth)
        throw Error(ErrorKind::CoincidentBranches, "branches agree through working precision");
      throw;
    }
    sum += ba.multiplicity * bb.multiplicity;
    if (!(ba.point == bb.point)) return sum;
    a = std::move(ba.strict);
    b = std::move(bb.strict);
  }
}

int start_order(const Branch& b) {
  int s = 0;
  if (visible(b.x)) s += b.x.order();
  if (visible(b.y)) s += b.y.order();
  return 2 * s + 4;
}

// Runs `compute` at increasing precision levels. Exact inputs return after
// the first success; jets must agree at two consecutive levels or succeed at
// the input precision itself.
template <class F>
auto adaptive(const std::vector<Branch>& bs, F&& compute) -> decltype(compute(bs)) {
  using R = decltype(compute(bs));
  bool all_exact = true;
  int n0 = 4, maxdeg = 0, cap = 0;
  int jet_cap = -1;
  for (const auto& b : bs) {
    n0 = std::max(n0, start_order(b));
    maxdeg = std::max(maxdeg, b.max_degree());
    if (!b.exact) {
      all_exact = false;
      jet_cap = jet_cap < 0 ? b.trunc() : std::min(jet_cap, b.trunc());
    }
  }
  cap = all_exact ? std::max(kExactCap, 8 * maxdeg) : jet_cap;
  std::vector<int> levels;
  for (int l = std::min(all_exact ? std::max(n0, maxdeg) : n0, cap); l < cap; l *= 2) levels.push_back(l);
  levels.push_back(cap);
  std::optional<R> prev;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const bool last = i + 1 == levels.size();
    std::vector<Branch> at;
    for (const auto& b : bs) at.push_back(b.at_level(levels[i]));
    try {
      R r = compute(at);
      if (all_exact || last || (prev && *prev == r)) return r;
      prev = std::move(r);
    } catch (const Error& e) {
      const bool retry = e.kind() == ErrorKind::PrecisionExhausted || e.kind() == ErrorKind::CoincidentBranches ||
                         e.kind() == ErrorKind::DegenerateBranch;
      if (last || !retry) throw;
      prev.reset();
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "no precision level succeeded");
}

int natural_level(const Branch& b) { return b.exact ? std::max(start_order(b), b.max_degree()) : b.trunc(); }

}  // namespace

// ---------------------------------------------------------------- public API

int order_v(const Branch& b) {
  return adaptive({b}, [](const std::vector<Branch>& v) { return level_order(v[0]); });
}

int order_v(const CurveGerm& g) {
  int s = 0;
  for (const auto& b : g.branches) s += order_v(b);
  return s;
}

BlowUp blow_up(const Branch& b) { return blow_up_at(b.at_level(natural_level(b))); }

std::vector<int> mult_sequence(const Branch& b) {
  return adaptive({b}, [](const std::vector<Branch>& v) { return mult_sequence_at(v[0]); });
}

int intersection(const Branch& b1, const Branch& b2) {
  return adaptive({b1, b2}, [](const std::vector<Branch>& v) { return intersection_at(v[0], v[1]); });
}

GermInvariants invariants(const CurveGerm& g) {
  if (g.branches.empty()) throw Error(ErrorKind::InvalidInput, "curve germ needs at least one branch");
  GermInvariants inv;
  inv.k = static_cast<int>(g.branches.size());
  inv.intersections.assign(g.branches.size(), std::vector<int>(g.branches.size(), 0));
  for (std::size_t i = 0; i < g.branches.size(); ++i) {
    inv.v += order_v(g.branches[i]);
    inv.mult_sequences.push_back(mult_sequence(g.branches[i]));
    for (int m : inv.mult_sequences.back()) inv.delta += static_cast<long>(m) * (m - 1) / 2;
    for (std::size_t j = 0; j < i; ++j) {
      const int c = intersection(g.branches[j], g.branches[i]);
      inv.intersections[i][j] = inv.intersections[j][i] = c;
      inv.delta += c;
    }
  }
  inv.mu = 2 * inv.delta - inv.k + 1;
  inv.P = inv.mu + inv.v - 1;
  const auto e = [](long k) { return GClass::L_power(static_cast<int>(k)); };
  inv.factors.R = e(inv.delta - inv.k - inv.P);
  inv.factors.theorem2_weight = e(-inv.delta);
  inv.factors.abstract_weight = e(-inv.delta - inv.v);
  inv.factors.identity_holds = inv.factors.R == inv.factors.abstract_weight;
  return inv;
}

long delta(const CurveGerm& g) { return invariants(g).delta; }
long milnor(const CurveGerm& g) { return invariants(g).mu; }
long p_invariant(const CurveGerm& g) { return invariants(g).P; }
CorrespondenceFactors correspondence_factor(const CurveGerm& g) { return invariants(g).factors; }

long p_direct(const CurveGerm& g, const PlanePoly& f) {
  if (g.branches.empty()) throw Error(ErrorKind::InvalidInput, "curve germ needs at least one branch");
  const PlanePoly fx = f.dx(), fy = f.dy();
  long total = 0;
  for (const auto& b : g.branches) {
    // Vanishing is checked completely for exact branches, through the jet otherwise.
    const Branch full = b.exact ? b.at_level(std::max(1, f.degree()) * std::max(1, b.max_degree())) : b;
    if (!f.eval(full).is_zero())
      throw Error(ErrorKind::EquationDoesNotVanish, "equation " + f.to_string() + " does not vanish on a branch");
    total += adaptive({b}, [&](const std::vector<Branch>& v) {
      const int ox = fx.eval(v[0]).order(), oy = fy.eval(v[0]).order();
      const int p = std::min(ox, oy);
      if (p > v[0].trunc()) throw Error(ErrorKind::PrecisionExhausted, "partial derivatives vanish through precision");
      return p;
    });
  }
  return total;
}

Normalized normalize(const Branch& b) { return normalize_at(b.at_level(natural_level(b))); }

std::optional<DegeneracyWitness> degeneracy_witness(const Branch& b) {
  return degeneracy_at(b.at_level(b.exact ? 2 * natural_level(b) : b.trunc()));
}

bool is_degenerate(const Branch& b) { return degeneracy_witness(b).has_value(); }

int support_gcd(const Branch& b) {
  const Branch nb = normalize(b).branch;
  int g = nb.x.order();
  for (const auto& [e, c] : nb.y.terms()) g = std::gcd(g, e[0]);
  return g;
}

}  // namespace motivic
