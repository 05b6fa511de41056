#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "motivic/error.hpp"
#include "motivic/gclass.hpp"

namespace motivic {

/// Exact n-th root of a rational, if it exists.
std::optional<Rational> rational_nth_root(const Rational& c, unsigned n);

// Coefficient domains a series can carry. Each specialization states whether
// the domain is a field and how units, roots and printing work.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Integer> {
  static constexpr bool is_field = false;
  static bool is_zero(const Integer& c) { return sgn(c) == 0; }
  static std::optional<Integer> inverse(const Integer& c) {
    if (c == 1 || c == -1) return c;
    return std::nullopt;
  }
  static std::optional<Integer> nth_root(const Integer& c, unsigned n) {
    auto r = rational_nth_root(Rational(c), n);
    if (!r || r->get_den() != 1) return std::nullopt;
    return r->get_num();
  }
  static std::string to_string(const Integer& c) { return c.get_str(); }
  static bool is_atomic(const Integer&) { return true; }
};

template <>
struct CoeffTraits<Rational> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static std::optional<Rational> inverse(const Rational& c) {
    if (sgn(c) == 0) return std::nullopt;
    return Rational(1 / c);
  }
  static std::optional<Rational> nth_root(const Rational& c, unsigned n) { return rational_nth_root(c, n); }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string to_string(const Rational& c) { return c.get_str(); }
  static bool is_atomic(const Rational&) { return true; }
};

template <>
struct CoeffTraits<Laurent> {
  static constexpr bool is_field = false;
  static bool is_zero(const Laurent& c) { return c.is_zero(); }
  static std::optional<Laurent> inverse(const Laurent& c) { return c.unit_inverse(); }
  static std::optional<Laurent> nth_root(const Laurent& c, unsigned n) {
    if (c.terms().size() != 1) return std::nullopt;
    const auto [e, k] = c.terms().front();
    if (e % static_cast<int>(n) != 0) return std::nullopt;
    auto r = CoeffTraits<Integer>::nth_root(k, n);
    if (!r) return std::nullopt;
    return Laurent::L_power(e / static_cast<int>(n), *r);
  }
  static std::string to_string(const Laurent& c) { return c.to_string(); }
  static bool is_atomic(const Laurent& c) { return c.terms().size() <= 1; }
};

template <>
struct CoeffTraits<GClass> {
  static constexpr bool is_field = true;
  static bool is_zero(const GClass& c) { return c.is_zero(); }
  static std::optional<GClass> inverse(const GClass& c) {
    if (c.is_zero()) return std::nullopt;
    return GClass(1) / c;
  }
  static std::optional<GClass> nth_root(const GClass& c, unsigned n) {
    if (auto r = c.to_rational()) {
      if (auto root = rational_nth_root(*r, n)) return GClass(*root);
      return std::nullopt;
    }
    if (auto l = c.to_laurent()) {
      if (auto root = CoeffTraits<Laurent>::nth_root(*l, n)) return GClass(*root);
    }
    return std::nullopt;
  }
  static GClass from_rational(const Rational& r) { return GClass(r); }
  static std::string to_string(const GClass& c) { return c.to_string(); }
  static bool is_atomic(const GClass& c) {
    auto l = c.to_laurent();
    return l && l->terms().size() <= 1;
  }
};

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Truncated formal power series in one or several variables. Coefficients of
/// every monomial of total degree <= trunc() are known exactly; nothing is
/// known beyond. Storage is sparse and never holds a zero coefficient.
template <class C>
class TruncSeries {
 public:
  using Traits = CoeffTraits<C>;
  using Terms = std::map<Exponent, C>;

  TruncSeries() : vars_{"t"}, trunc_(0) {}
  TruncSeries(std::vector<std::string> vars, int trunc) : vars_(std::move(vars)), trunc_(trunc) {
    if (vars_.empty()) throw Error(ErrorKind::InvalidInput, "a series needs at least one variable");
    if (trunc_ < 0) throw Error(ErrorKind::InvalidInput, "truncation order must be nonnegative");
  }

  static TruncSeries constant(std::vector<std::string> vars, int trunc, const C& c) {
    TruncSeries s(std::move(vars), trunc);
    s.set(Exponent(s.nvars(), 0), c);
    return s;
  }
  static TruncSeries one(std::vector<std::string> vars, int trunc) { return constant(std::move(vars), trunc, C(1)); }
  /// The monomial c * var_index^power.
  static TruncSeries monomial(std::vector<std::string> vars, int trunc, std::size_t index, int power,
                              const C& c = C(1)) {
    TruncSeries s(std::move(vars), trunc);
    Exponent e(s.nvars(), 0);
    e.at(index) = power;
    s.set(e, c);
    return s;
  }
  /// Univariate series from dense coefficients; entry i multiplies t^i.
  static TruncSeries from_dense(std::string var, int trunc, const std::vector<C>& coeffs) {
    TruncSeries s({std::move(var)}, trunc);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.set({static_cast<int>(i)}, coeffs[i]);
    return s;
  }

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  bool univariate() const noexcept { return vars_.size() == 1; }
  int trunc() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }

  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  C coeff(int k) const { return coeff(Exponent{k}); }

  /// Stores c at e; zero coefficients and degrees beyond trunc are dropped.
  void set(const Exponent& e, const C& c) {
    if (e.size() != nvars()) throw Error(ErrorKind::VariableMismatch, "exponent arity does not match variables");
    if (total_degree(e) > trunc_) return;
    if (Traits::is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = c;
    }
  }
  void add_to(const Exponent& e, const C& c) {
    if (total_degree(e) > trunc_ || Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Least total degree with a nonzero coefficient; trunc()+1 when the
  /// series vanishes through its truncation order.
  int order() const {
    int best = trunc_ + 1;
    for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
    return best;
  }
  C constant_term() const { return coeff(Exponent(nvars(), 0)); }

  /// Lowers the truncation order to min(trunc(), n).
  TruncSeries truncated(int n) const {
    TruncSeries r(vars_, std::min(n, trunc_));
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= r.trunc_) r.terms_.emplace(e, c);
    return r;
  }
  /// Reinterprets the stored terms as an exact polynomial known through n.
  /// Only meaningful for series that are genuinely polynomial.
  TruncSeries as_exact(int n) const {
    TruncSeries r(vars_, n);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= n) r.terms_.emplace(e, c);
    return r;
  }
  /// Largest total degree among stored terms (-1 for zero).
  int max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  /// Dense coefficient vector of a univariate series, of length trunc()+1.
  std::vector<C> dense() const {
    require_univariate("dense");
    std::vector<C> v(static_cast<std::size_t>(trunc_) + 1, C(0));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e[0])] = c;
    return v;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_vars(b);
    TruncSeries r = a.truncated(b.trunc_);
    for (const auto& [e, c] : b.terms_) r.add_to(e, c);
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_vars(b);
    const int n = std::min(a.trunc_, b.trunc_);
    if (a.univariate()) return from_dense(a.vars_[0], n, dense_mul(a.dense_upto(n), b.dense_upto(n), n));
    TruncSeries r(a.vars_, n);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      if (da > n) continue;
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > n) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        C prod = ca;
        prod *= cb;
        r.add_to(e, prod);
      }
    }
    return r;
  }

  friend TruncSeries operator*(const C& k, const TruncSeries& a) {
    TruncSeries r(a.vars_, a.trunc_);
    if (Traits::is_zero(k)) return r;
    for (const auto& [e, c] : a.terms_) {
      C v = k;
      v *= c;
      r.set(e, v);
    }
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
  TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
  TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  /// Coefficient-wise equality through degree n, ignoring stored truncation.
  bool agrees_through(const TruncSeries& b, int n) const {
    return truncated(n).terms_ == b.truncated(n).terms_;
  }

  /// Multiplication by t^k (univariate); known through trunc()+k.
  TruncSeries shift_up(int k) const {
    require_univariate("shift_up");
    TruncSeries r(vars_, trunc_ + k);
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e[0] + k}, c);
    return r;
  }
  /// Division by t^k (univariate); requires order() >= k, known through trunc()-k.
  TruncSeries shift_down(int k) const {
    require_univariate("shift_down");
    if (order() < k) throw Error(ErrorKind::InvalidInput, "shift_down below the series order");
    if (trunc_ - k < 0) throw Error(ErrorKind::PrecisionExhausted, "no coefficients left after shift_down");
    TruncSeries r(vars_, trunc_ - k);
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e[0] - k}, c);
    return r;
  }

  /// Formal derivative of a univariate series; known through trunc()-1.
  TruncSeries derivative() const {
    require_univariate("derivative");
    TruncSeries r(vars_, std::max(trunc_ - 1, 0));
    for (const auto& [e, c] : terms_) {
      if (e[0] == 0) continue;
      C v = c;
      v *= C(e[0]);
      r.set({e[0] - 1}, v);
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = Traits::to_string(c);
      const bool unit_mono = total_degree(e) > 0;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      const bool negative = Traits::is_atomic(c) && !cs.empty() && cs[0] == '-';
      if (!first) {
        os << (negative ? " - " : " + ");
        if (negative) cs.erase(0, 1);
      }
      first = false;
      if (!unit_mono) {
        os << (Traits::is_atomic(c) ? cs : "(" + cs + ")");
      } else if (cs == "1") {
        os << mono;
      } else if (cs == "-1") {
        os << "-" << mono;
      } else {
        os << (Traits::is_atomic(c) ? cs : "(" + cs + ")") << "*" << mono;
      }
    }
    if (first) os << "0";
    os << " + O(";
    if (univariate()) {
      os << vars_[0] << "^" << trunc_ + 1;
    } else {
      os << "deg " << trunc_ + 1;
    }
    os << ")";
    return os.str();
  }

  void require_univariate(const char* what) const {
    if (!univariate()) throw Error(ErrorKind::VariableMismatch, std::string(what) + " needs a univariate series");
  }
  void require_same_vars(const TruncSeries& b) const {
    if (vars_ != b.vars_) throw Error(ErrorKind::VariableMismatch, "series over different variables");
  }

  std::vector<C> dense_upto(int n) const {
    std::vector<C> v(static_cast<std::size_t>(n) + 1, C(0));
    for (const auto& [e, c] : terms_)
      if (e[0] <= n) v[static_cast<std::size_t>(e[0])] = c;
    return v;
  }

  static std::vector<C> dense_mul(const std::vector<C>& a, const std::vector<C>& b, int n) {
    std::vector<C> r(static_cast<std::size_t>(n) + 1, C(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) {
        if (Traits::is_zero(b[j])) continue;
        C p = a[i];
        p *= b[j];
        r[i + j] += p;
      }
    }
    return r;
  }

 private:
  std::vector<std::string> vars_;
  int trunc_;
  Terms terms_;
};

/// Multiplicative inverse through trunc. The constant term must be a unit of
/// the coefficient domain; otherwise NonUnitConstantTerm.
template <class C>
TruncSeries<C> recip(const TruncSeries<C>& a) {
  using Traits = CoeffTraits<C>;
  const C c0 = a.constant_term();
  auto inv = Traits::inverse(c0);
  if (!inv) throw Error(ErrorKind::NonUnitConstantTerm, "constant term " + Traits::to_string(c0) + " is not a unit");
  const int n = a.trunc();
  if (a.univariate()) {
    const std::vector<C> av = a.dense();
    std::vector<C> r(static_cast<std::size_t>(n) + 1, C(0));
    r[0] = *inv;
    for (int k = 1; k <= n; ++k) {
      C s(0);
      for (int j = 1; j <= k; ++j) {
        if (Traits::is_zero(av[static_cast<std::size_t>(j)])) continue;
        C p = av[static_cast<std::size_t>(j)];
        p *= r[static_cast<std::size_t>(k - j)];
        s += p;
      }
      C v = -s;
      v *= *inv;
      r[static_cast<std::size_t>(k)] = v;
    }
    return TruncSeries<C>::from_dense(a.vars()[0], n, r);
  }
  // 1/(c0 (1 + u)) = c0^-1 sum (-u)^j with u of positive order.
  TruncSeries<C> u = *inv * a - TruncSeries<C>::one(a.vars(), n);
  TruncSeries<C> neg_u = -u;
  TruncSeries<C> term = TruncSeries<C>::one(a.vars(), n);
  TruncSeries<C> sum = term;
  for (int j = 1; j <= n; ++j) {
    term = term * neg_u;
    if (term.is_zero()) break;
    sum += term;
  }
  return *inv * sum;
}

/// Integer power; negative exponents go through recip.
template <class C>
TruncSeries<C> pow(const TruncSeries<C>& a, long e) {
  if (e < 0) return pow(recip(a), -e);
  TruncSeries<C> result = TruncSeries<C>::one(a.vars(), a.trunc());
  TruncSeries<C> base = a;
  while (e != 0) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

/// A(B(t)) for univariate series with order(B) >= 1, through min of the two
/// truncation orders.
template <class C>
TruncSeries<C> compose(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  a.require_univariate("compose");
  b.require_univariate("compose");
  if (b.order() < 1 || !CoeffTraits<C>::is_zero(b.constant_term()))
    throw Error(ErrorKind::PositiveOrderRequired, "inner series must have positive order");
  const int n = std::min(a.trunc(), b.trunc());
  const std::vector<C> av = a.dense_upto(n);
  const std::vector<C> bv = b.dense_upto(n);
  // Horner from the top degree down.
  std::vector<C> acc(static_cast<std::size_t>(n) + 1, C(0));
  for (int k = n; k >= 0; --k) {
    acc = TruncSeries<C>::dense_mul(acc, bv, n);
    acc[0] += av[static_cast<std::size_t>(k)];
  }
  return TruncSeries<C>::from_dense(a.vars()[0], n, acc);
}

/// Compositional inverse of an order-one series: compose(a, reversion(a)) = t.
/// Computed by Newton iteration B <- B - (A(B) - t) / A'(B).
template <class C>
TruncSeries<C> reversion(const TruncSeries<C>& a) {
  a.require_univariate("reversion");
  if (a.order() != 1 || !CoeffTraits<C>::is_zero(a.constant_term()))
    throw Error(ErrorKind::NotOrderOne, "reversion needs a series of order exactly one");
  auto inv = CoeffTraits<C>::inverse(a.coeff(1));
  if (!inv) throw Error(ErrorKind::NotOrderOne, "leading coefficient is not invertible");
  const int n = a.trunc();
  const auto& var = a.vars()[0];
  const TruncSeries<C> t = TruncSeries<C>::monomial({var}, n, 0, 1);
  // A' loses one order; pad it back since A is known through n and only
  // its coefficients up to n-1 matter for the correction term.
  const TruncSeries<C> da = a.derivative().as_exact(n);
  TruncSeries<C> b = *inv * t;
  for (int done = 1; done <= n; done *= 2) {
    TruncSeries<C> residual = compose(a, b) - t;
    if (residual.is_zero()) break;
    b = b - residual * recip(compose(da, b));
  }
  return b.truncated(n);
}

/// n-th root of a univariate series whose constant term has an n-th root in
/// the coefficient field (NoRootInField otherwise). The unit part is raised to
/// the power 1/n with the J.C.P. Miller recurrence.
template <class C>
TruncSeries<C> nth_root_unit(const TruncSeries<C>& a, unsigned n) {
  static_assert(CoeffTraits<C>::is_field, "nth_root_unit needs a coefficient field");
  using Traits = CoeffTraits<C>;
  a.require_univariate("nth_root_unit");
  if (n == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  const C c0 = a.constant_term();
  auto r0 = Traits::is_zero(c0) ? std::nullopt : Traits::nth_root(c0, n);
  if (!r0)
    throw Error(ErrorKind::NoRootInField,
                "constant term " + Traits::to_string(c0) + " has no " + std::to_string(n) + "-th root");
  const int N = a.trunc();
  const C inv_c0 = *Traits::inverse(c0);
  std::vector<C> u = a.dense();
  for (auto& x : u) x *= inv_c0;
  const Rational alpha(1, n);
  std::vector<C> p(static_cast<std::size_t>(N) + 1, C(0));
  p[0] = C(1);
  for (int k = 1; k <= N; ++k) {
    C s(0);
    for (int j = 1; j <= k; ++j) {
      if (Traits::is_zero(u[static_cast<std::size_t>(j)])) continue;
      Rational w = (alpha + 1) * j - k;
      C term = Traits::from_rational(w);
      term *= u[static_cast<std::size_t>(j)];
      term *= p[static_cast<std::size_t>(k - j)];
      s += term;
    }
    s *= Traits::from_rational(Rational(1, k));
    p[static_cast<std::size_t>(k)] = s;
  }
  for (auto& x : p) x *= *r0;
  return TruncSeries<C>::from_dense(a.vars()[0], N, p);
}

/// Substitutes t -> scale * x^exponent into a univariate series, producing a
/// series over `vars` truncated at total degree `trunc`. The monomial must
/// have positive total degree.
template <class C>
TruncSeries<C> substitute_monomial(const TruncSeries<C>& a, const std::vector<std::string>& vars, int trunc,
                                   const Exponent& exponent, const C& scale) {
  a.require_univariate("substitute_monomial");
  const int d = total_degree(exponent);
  if (d <= 0) throw Error(ErrorKind::NonPositiveDegree, "substituted monomial must have positive degree");
  TruncSeries<C> r(vars, trunc);
  const int jmax = std::min(a.trunc(), trunc / d);
  // Beyond jmax the input is unknown, but those terms only reach degree > trunc.
  if (a.trunc() < trunc / d)
    r = TruncSeries<C>(vars, std::min(trunc, (a.trunc() + 1) * d - 1));
  C power(1);
  Exponent e(vars.size(), 0);
  for (int j = 0; j <= jmax; ++j) {
    const C c = a.coeff(j);
    if (!CoeffTraits<C>::is_zero(c)) {
      C v = c;
      v *= power;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent[i] * j;
      r.set(e, v);
    }
    power *= scale;
  }
  return r;
}

/// Converts coefficients through a callable.
template <class To, class From, class F>
TruncSeries<To> map_coeffs(const TruncSeries<From>& a, F&& f) {
  TruncSeries<To> r(a.vars(), a.trunc());
  for (const auto& [e, c] : a.terms()) r.set(e, f(c));
  return r;
}

using RationalSeries = TruncSeries<Rational>;
using IntegerSeries = TruncSeries<Integer>;
using LaurentSeries = TruncSeries<Laurent>;
using ClassSeries = TruncSeries<GClass>;

/// Parses a univariate series expression in `var` with coefficients built
/// from integers and L, e.g. "1 + L*t + (L^2-L)*t^2".
ClassSeries parse_class_series(std::string_view text, const std::string& var, int trunc);
/// Same for rational coefficients (no L allowed).
RationalSeries parse_rational_series(std::string_view text, const std::string& var, int trunc);

}  // namespace motivic
