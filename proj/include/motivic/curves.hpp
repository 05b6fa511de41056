#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/gclass.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// A parametrized plane branch (x(t), y(t)) through the origin. When `exact`
/// is set the two series are complete polynomials and may be extended to any
/// precision; otherwise they are jets known through their truncation order.
struct Branch {
  RationalSeries x;
  RationalSeries y;
  bool exact = false;

  /// Checks orders >= 1, same variable, not both zero.
  static Branch make(RationalSeries x, RationalSeries y, bool exact);
  /// Exact polynomial branch from expressions in t, e.g. ("t^2", "t^3").
  static Branch parse(const std::string& x, const std::string& y, bool exact = true);
  /// Common truncation order of the two components.
  int trunc() const { return std::min(x.trunc(), y.trunc()); }
  /// The branch as seen at precision level n (exact branches are extended).
  Branch at_level(int n) const;
  int max_degree() const { return std::max(x.max_degree(), y.max_degree()); }
};

struct CurveGerm {
  std::vector<Branch> branches;
};

/// Polynomial in x, y with rational coefficients and no constant term.
class PlanePoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  PlanePoly() = default;
  explicit PlanePoly(Terms terms);
  /// Parses e.g. "y^2 - x^3" or "x*y + 1/2*x^2".
  static PlanePoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  PlanePoly dx() const;
  PlanePoly dy() const;
  /// f(x(t), y(t)) through min(trunc x, trunc y).
  RationalSeries eval(const RationalSeries& x, const RationalSeries& y) const;
  RationalSeries eval(const Branch& b) const { return eval(b.x, b.y); }
  /// f(x + c*y, y).
  PlanePoly shear(const Rational& c) const;
  /// f(y, x).
  PlanePoly swapped() const;

  std::string to_string() const;

  friend PlanePoly operator+(const PlanePoly& a, const PlanePoly& b);
  friend PlanePoly operator-(const PlanePoly& a, const PlanePoly& b);
  friend PlanePoly operator*(const PlanePoly& a, const PlanePoly& b);
  PlanePoly operator-() const;
  friend bool operator==(const PlanePoly& a, const PlanePoly& b) { return a.terms_ == b.terms_; }

 private:
  void add(std::pair<int, int> e, const Rational& c);
  Terms terms_;
};

/// Point of the exceptional divisor hit by a strict transform: the value of
/// y/x at the origin, or infinity for the tangent x = 0.
struct ExceptionalPoint {
  bool infinity = false;
  Rational c;
  friend bool operator==(const ExceptionalPoint& a, const ExceptionalPoint& b) {
    return a.infinity == b.infinity && (a.infinity || a.c == b.c);
  }
  std::string to_string() const { return infinity ? "inf" : c.get_str(); }
};

struct BlowUp {
  Branch strict;
  int multiplicity;
  ExceptionalPoint point;
};

int order_v(const Branch& b);
int order_v(const CurveGerm& g);

BlowUp blow_up(const Branch& b);
/// Multiplicities of the successive infinitely near points until the strict
/// transform is smooth; empty for a smooth branch.
std::vector<int> mult_sequence(const Branch& b);
int intersection(const Branch& b1, const Branch& b2);

long delta(const CurveGerm& g);
long milnor(const CurveGerm& g);
long p_invariant(const CurveGerm& g);
/// Sum over branches of min(ord f_x, ord f_y) along the branch.
long p_direct(const CurveGerm& g, const PlanePoly& f);

struct CorrespondenceFactors {
  GClass R;                ///< L^(delta - k - P)
  GClass theorem2_weight;  ///< L^(-delta)
  GClass abstract_weight;  ///< L^(-delta - v)
  bool identity_holds;     ///< R == abstract_weight
};
CorrespondenceFactors correspondence_factor(const CurveGerm& g);

struct GermInvariants {
  int k = 0;
  int v = 0;
  long delta = 0;
  long mu = 0;
  long P = 0;
  std::vector<std::vector<int>> mult_sequences;
  std::vector<std::vector<int>> intersections;  ///< pairwise, zero diagonal
  CorrespondenceFactors factors;
};
GermInvariants invariants(const CurveGerm& g);

struct Normalized {
  Branch branch;
  bool swapped = false;
};
/// Reparametrizes so the component of smaller order is exactly t^a,
/// swapping coordinates first if v_x > v_y.
Normalized normalize(const Branch& b);

/// A reparametrization h of order d >= 2 with (x, y) = (x*(h), y*(h)).
struct DegeneracyWitness {
  int d;
  RationalSeries h;
  RationalSeries xstar;
  RationalSeries ystar;
};
/// Searches divisors d >= 2 of gcd(v_x, v_y) with a triangular coefficient
/// solver. Works on the normalized branch at its working precision.
std::optional<DegeneracyWitness> degeneracy_witness(const Branch& b);
bool is_degenerate(const Branch& b);

/// Cross-check for degeneracy: gcd of the exponent support of the
/// normalized branch.
int support_gcd(const Branch& b);

}  // namespace motivic
