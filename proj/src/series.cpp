#include "motivic/series.hpp"

#include "expr.hpp"

namespace motivic {

std::optional<Rational> rational_nth_root(const Rational& c, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return c;
  const bool neg = sgn(c) < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  Integer num = abs(c.get_num());
  Integer den = c.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  Rational r(neg ? Integer(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

namespace {

template <class C>
TruncSeries<C> parse_series(std::string_view text, const std::string& var, int trunc, bool allow_L) {
  using S = TruncSeries<C>;
  const std::vector<std::string> vars{var};
  detail::ExprSemantics<S> sem;
  sem.number = [&](const Integer& k) { return S::constant(vars, trunc, C(k)); };
  sem.symbol = [&](std::string_view name) -> std::optional<S> {
    if (name == var) return S::monomial(vars, trunc, 0, 1);
    if constexpr (std::is_same_v<C, GClass>) {
      if (allow_L && name == "L") return S::constant(vars, trunc, GClass::L());
    }
    return std::nullopt;
  };
  sem.divide = [](const S& a, const S& b) { return a * recip(b); };
  sem.power = [](const S& a, long e) { return pow(a, e); };
  return detail::ExprParser<S>(text, sem).parse();
}

}  // namespace

ClassSeries parse_class_series(std::string_view text, const std::string& var, int trunc) {
  return parse_series<GClass>(text, var, trunc, true);
}

RationalSeries parse_rational_series(std::string_view text, const std::string& var, int trunc) {
  return parse_series<Rational>(text, var, trunc, false);
}

}  // namespace motivic
