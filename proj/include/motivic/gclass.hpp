#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in L with arbitrary-precision integer coefficients.
/// Coefficient i multiplies L^i; there are never trailing zeros, so the zero
/// polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int exponent);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
  int low_degree() const noexcept;
  bool is_monomial() const noexcept;

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  Integer coeff(int exponent) const;
  const Integer& leading() const { return c_.back(); }
  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  Rational eval(const Rational& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly scaled(const Integer& k) const;
  IntPoly shifted_up(int k) const;
  /// Exact division of every coefficient by k.
  IntPoly divexact(const Integer& k) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Greatest common divisor in Z[L], content included, positive leading
/// coefficient. gcd(0, b) = b up to sign.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Quotient a / b, which must be exact in Z[L].
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// Primitive-PRS pseudo-remainder of a by b (b nonzero).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Element of Z[L, L^-1], stored as L^low * body with body(0) != 0.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) : Laurent(Integer(c)) {}  // NOLINT: integers embed
  Laurent(const Integer& c);                 // NOLINT
  Laurent(int low, IntPoly body);

  static Laurent L_power(int k, const Integer& c = 1);
  static Laurent L() { return L_power(1); }

  bool is_zero() const noexcept { return body_.is_zero(); }
  bool is_one() const;
  /// Smallest / largest exponent with a nonzero coefficient (0 for zero).
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return is_zero() ? 0 : low_ + body_.degree(); }
  Integer coeff(int exponent) const;
  /// (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<int, Integer>> terms() const;
  const IntPoly& body() const noexcept { return body_; }

  Rational eval(const Rational& x) const;
  Integer euler_char() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

  Laurent pow(unsigned e) const;
  /// Substitution L -> L^k for k >= 1.
  Laurent stretch(int k) const;
  /// Inverse in Z[L, L^-1]; defined only for units +-L^k.
  std::optional<Laurent> unit_inverse() const;

  std::string to_string() const;

 private:
  void normalize();
  int low_ = 0;
  IntPoly body_;
};

/// Element of the localized Grothendieck ring, restricted to rational
/// functions in L. Always stored in canonical form: numerator and
/// denominator coprime in Z[L], denominator with positive leading
/// coefficient, zero stored as 0/1. Equal values have identical storage.
class GClass {
 public:
  GClass() : den_(IntPoly::constant(1)) {}
  GClass(long c) : GClass(Integer(c)) {}  // NOLINT
  GClass(const Integer& c);                // NOLINT
  GClass(const Rational& c);               // NOLINT
  GClass(const Laurent& l);                // NOLINT

  /// Canonicalizes num/den. Throws DivisionByZero when den is zero.
  static GClass fraction(IntPoly num, IntPoly den);
  static GClass L() { return L_power(1); }
  static GClass L_power(int k);

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;

  /// Some Laurent polynomial equal to this class, if one exists.
  std::optional<Laurent> to_laurent() const;
  /// Like to_laurent() but throws NotLaurentPolynomial.
  Laurent laurent() const;
  /// Constant value when the class does not depend on L.
  std::optional<Rational> to_rational() const;

  GClass operator-() const;
  GClass& operator+=(const GClass& rhs);
  GClass& operator-=(const GClass& rhs);
  GClass& operator*=(const GClass& rhs);
  GClass& operator/=(const GClass& rhs);
  friend GClass operator+(GClass a, const GClass& b) { return a += b; }
  friend GClass operator-(GClass a, const GClass& b) { return a -= b; }
  friend GClass operator*(GClass a, const GClass& b) { return a *= b; }
  friend GClass operator/(GClass a, const GClass& b) { return a /= b; }
  friend bool operator==(const GClass& a, const GClass& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents need a nonzero class.
  GClass pow(long e) const;

  /// Value at L = 1. Throws PoleAtOne when the reduced denominator vanishes there.
  Rational euler_char() const;
  /// Exact value at L = q for an integer q >= 2. Throws PoleAtQ.
  Rational specialize(const Integer& q) const;
  /// Value at an arbitrary rational point. Throws PoleAtQ.
  Rational evaluate(const Rational& x) const;
  /// deg(num) - deg(den): the filtration degree. nullopt stands for -infinity
  /// (the zero class).
  std::optional<long> virtual_dim() const;

  std::string to_string() const;

 private:
  GClass(IntPoly num, IntPoly den, bool /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const GClass& g);
std::ostream& operator<<(std::ostream& os, const Laurent& l);

/// Closed form of sum_{k>=0} first * ratio^k. Requires virtual_dim(ratio) < 0,
/// otherwise throws DivergentSeries.
GClass geometric_sum(const GClass& first, const GClass& ratio);

/// Parses expressions such as "(L+1)*(L-1)*L^-3" or "1/(1-L^-2)".
GClass parse_class(std::string_view text);

}  // namespace motivic
