#include "motivic/gclass.hpp"

#include <algorithm>
#include <sstream>

#include "expr.hpp"
#include "motivic/error.hpp"

namespace motivic {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int exponent) {
  std::vector<Integer> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int IntPoly::low_degree() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

bool IntPoly::is_monomial() const noexcept {
  if (c_.empty()) return false;
  return low_degree() == degree();
}

Integer IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return c_[static_cast<std::size_t>(exponent)];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Integer& k) const {
  IntPoly r = *this;
  for (auto& c : r.c_) c *= k;
  r.trim();
  return r;
}

IntPoly IntPoly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(static_cast<std::size_t>(k), Integer(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

IntPoly IntPoly::divexact(const Integer& k) const {
  IntPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const Integer lr = r.leading();
    const int shift = r.degree() - db;
    r = r.scaled(lb) - b.shifted_up(shift).scaled(lr);
  }
  return r;
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly r = p.divexact(p.content());
  return sgn(r.leading()) < 0 ? -r : r;
}

Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b).scaled(b.content());
  if (b.is_zero()) return primitive_part(a).scaled(a.content());
  const Integer cg = integer_gcd(a.content(), b.content());
  if (a.is_monomial() || b.is_monomial()) {
    const int k = std::min(a.low_degree(), b.low_degree());
    return IntPoly::monomial(cg, k);
  }
  IntPoly p = primitive_part(a);
  IntPoly q = primitive_part(b);
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = primitive_part(r);
  }
  return primitive_part(p).scaled(cg);
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return a;
  const int db = b.degree();
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
  const Integer& lb = b.leading();
  for (int i = a.degree() - db; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + db)];
    if (sgn(top) == 0) continue;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = q;
  }
  return IntPoly(std::move(quot));
}

// ---------------------------------------------------------------------------
// Laurent

Laurent::Laurent(const Integer& c) : body_(IntPoly::constant(c)) {}

Laurent::Laurent(int low, IntPoly body) : low_(low), body_(std::move(body)) { normalize(); }

Laurent Laurent::L_power(int k, const Integer& c) { return Laurent(k, IntPoly::constant(c)); }

void Laurent::normalize() {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  const int s = body_.low_degree();
  if (s > 0) {
    std::vector<Integer> v(body_.coeffs().begin() + s, body_.coeffs().end());
    body_ = IntPoly(std::move(v));
    low_ += s;
  }
}

bool Laurent::is_one() const { return low_ == 0 && body_.degree() == 0 && body_.leading() == 1; }

Integer Laurent::coeff(int exponent) const { return body_.coeff(exponent - low_); }

std::vector<std::pair<int, Integer>> Laurent::terms() const {
  std::vector<std::pair<int, Integer>> out;
  const auto& c = body_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) out.emplace_back(low_ + static_cast<int>(i), c[i]);
  return out;
}

Rational Laurent::eval(const Rational& x) const {
  if (is_zero()) return 0;
  Rational v = body_.eval(x);
  Rational p = 1;
  const int e = low_ < 0 ? -low_ : low_;
  for (int i = 0; i < e; ++i) p *= x;
  return low_ < 0 ? Rational(v / p) : Rational(v * p);
}

Integer Laurent::euler_char() const {
  Integer s = 0;
  for (const auto& c : body_.coeffs()) s += c;
  return s;
}

Laurent Laurent::operator-() const { return Laurent(low_, -body_); }

Laurent& Laurent::operator+=(const Laurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  body_ = body_.shifted_up(low_ - lo) + rhs.body_.shifted_up(rhs.low_ - lo);
  low_ = lo;
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) { return *this += -rhs; }

Laurent& Laurent::operator*=(const Laurent& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Laurent();
  body_ = body_ * rhs.body_;
  low_ += rhs.low_;
  normalize();
  return *this;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent result(1);
  Laurent base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Laurent Laurent::stretch(int k) const {
  if (is_zero()) return *this;
  std::vector<Integer> v(static_cast<std::size_t>(body_.degree() * k) + 1);
  for (std::size_t i = 0; i < body_.coeffs().size(); ++i) v[i * static_cast<std::size_t>(k)] = body_.coeffs()[i];
  return Laurent(low_ * k, IntPoly(std::move(v)));
}

std::optional<Laurent> Laurent::unit_inverse() const {
  if (body_.degree() != 0) return std::nullopt;
  const Integer& c = body_.leading();
  if (c != 1 && c != -1) return std::nullopt;
  return L_power(-low_, c);
}

namespace {

std::string format_terms(const std::vector<std::pair<int, Integer>>& terms_desc) {
  if (terms_desc.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_desc) {
    Integer mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "L";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<std::pair<int, Integer>> descending_terms(const IntPoly& p, int shift) {
  std::vector<std::pair<int, Integer>> out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) != 0) out.emplace_back(i + shift, c);
  }
  return out;
}

}  // namespace

std::string Laurent::to_string() const { return format_terms(descending_terms(body_, low_)); }

// ---------------------------------------------------------------------------
// GClass

GClass::GClass(const Integer& c) : num_(IntPoly::constant(c)), den_(IntPoly::constant(1)) {}

GClass::GClass(const Rational& c)
    : num_(IntPoly::constant(c.get_num())), den_(IntPoly::constant(c.get_den())) {}

GClass::GClass(const Laurent& l) {
  if (l.min_exponent() >= 0) {
    num_ = l.body().shifted_up(l.min_exponent());
    den_ = IntPoly::constant(1);
  } else {
    num_ = l.body();
    den_ = IntPoly::monomial(1, -l.min_exponent());
  }
}

GClass GClass::fraction(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "class with zero denominator");
  if (num.is_zero()) return GClass();
  IntPoly g = gcd(num, den);
  if (!(g.degree() == 0 && g.leading() == 1)) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  if (sgn(den.leading()) < 0) {
    num = -num;
    den = -den;
  }
  return GClass(std::move(num), std::move(den), true);
}

GClass GClass::L_power(int k) {
  if (k >= 0) return GClass(IntPoly::monomial(1, k), IntPoly::constant(1), true);
  return GClass(IntPoly::constant(1), IntPoly::monomial(1, -k), true);
}

bool GClass::is_one() const {
  return num_.degree() == 0 && num_.leading() == 1 && den_.degree() == 0 && den_.leading() == 1;
}

std::optional<Laurent> GClass::to_laurent() const {
  if (!den_.is_monomial() || den_.leading() != 1) return std::nullopt;
  return Laurent(-den_.degree(), num_);
}

Laurent GClass::laurent() const {
  auto l = to_laurent();
  if (!l) throw Error(ErrorKind::NotLaurentPolynomial, to_string() + " is not a Laurent polynomial in L");
  return *l;
}

std::optional<Rational> GClass::to_rational() const {
  if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
  if (num_.is_zero()) return Rational(0);
  Rational r(num_.leading(), den_.leading());
  r.canonicalize();
  return r;
}

GClass GClass::operator-() const { return GClass(-num_, den_, true); }

GClass& GClass::operator+=(const GClass& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) return *this = fraction(num_ + rhs.num_, den_);
  if (den_.is_monomial() && rhs.den_.is_monomial() && den_.leading() == 1 && rhs.den_.leading() == 1) {
    const int a = den_.degree();
    const int b = rhs.den_.degree();
    const int m = std::max(a, b);
    return *this = fraction(num_.shifted_up(m - a) + rhs.num_.shifted_up(m - b), IntPoly::monomial(1, m));
  }
  return *this = fraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

GClass& GClass::operator-=(const GClass& rhs) { return *this += -rhs; }

GClass& GClass::operator*=(const GClass& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = GClass();
  // Cross-cancel before multiplying so gcds stay on smaller inputs.
  IntPoly g1 = gcd(num_, rhs.den_);
  IntPoly g2 = gcd(rhs.num_, den_);
  IntPoly a = divexact(num_, g1);
  IntPoly d = divexact(rhs.den_, g1);
  IntPoly c = divexact(rhs.num_, g2);
  IntPoly b = divexact(den_, g2);
  IntPoly n = a * c;
  IntPoly m = b * d;
  if (sgn(m.leading()) < 0) {
    n = -n;
    m = -m;
  }
  num_ = std::move(n);
  den_ = std::move(m);
  return *this;
}

GClass& GClass::operator/=(const GClass& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero class");
  IntPoly n = rhs.den_;
  IntPoly d = rhs.num_;
  if (sgn(d.leading()) < 0) {
    n = -n;
    d = -d;
  }
  return *this *= GClass(std::move(n), std::move(d), true);
}

GClass GClass::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of the zero class");
    return (GClass(1) / *this).pow(-e);
  }
  GClass result(1);
  GClass base = *this;
  while (e != 0) {
    if (e & 1L) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Rational GClass::euler_char() const {
  const Rational d = den_.eval(1);
  if (sgn(d) == 0) throw Error(ErrorKind::PoleAtOne, to_string() + " has a pole at L = 1");
  Rational r = num_.eval(1) / d;
  r.canonicalize();
  return r;
}

Rational GClass::evaluate(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (sgn(d) == 0) throw Error(ErrorKind::PoleAtQ, to_string() + " has a pole at L = " + x.get_str());
  Rational r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

Rational GClass::specialize(const Integer& q) const {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "specialization point must be an integer >= 2");
  return evaluate(Rational(q));
}

std::optional<long> GClass::virtual_dim() const {
  if (is_zero()) return std::nullopt;
  return static_cast<long>(num_.degree()) - den_.degree();
}

std::string GClass::to_string() const {
  if (auto l = to_laurent()) return l->to_string();
  auto wrap = [](const IntPoly& p) {
    auto t = descending_terms(p, 0);
    std::string s = format_terms(t);
    return t.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const GClass& g) { return os << g.to_string(); }
std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.to_string(); }

GClass geometric_sum(const GClass& first, const GClass& ratio) {
  const auto d = ratio.virtual_dim();
  if (d && *d >= 0)
    throw Error(ErrorKind::DivergentSeries,
                "ratio " + ratio.to_string() + " has virtual dimension " + std::to_string(*d) + " >= 0");
  return first / (GClass(1) - ratio);
}

GClass parse_class(std::string_view text) {
  detail::ExprSemantics<GClass> sem{
      [](const Integer& n) { return GClass(n); },
      [](std::string_view name) -> std::optional<GClass> {
        if (name == "L") return GClass::L();
        return std::nullopt;
      },
      [](const GClass& a, const GClass& b) { return a / b; },
      [](const GClass& a, long e) { return a.pow(e); },
  };
  return detail::ExprParser<GClass>(text, sem).parse();
}

}  // namespace motivic
