#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motivic/gclass.hpp"
#include "motivic/series.hpp"

namespace motivic {

struct Component {
  std::string id;
  int nu = 1;              ///< multiplicity in the relative canonical divisor
  GClass euler_open_class; ///< [E_s minus the other components and strict transforms]
};

/// Combinatorics of an embedded resolution.
struct ResolutionData {
  std::vector<Component> components;
  std::vector<std::vector<long>> intersections;  ///< E_i . E_j
  std::vector<std::pair<int, int>> arrows;       ///< (component index, strict transform index)

  /// Square symmetric negative definite matrix, nu >= 1, every strict
  /// transform on exactly one component.
  void validate() const;
  int strict_count() const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; SingularMatrix if none.
RationalMatrix invert(const RationalMatrix& a);
/// Inverse of -(E_i . E_j).
RationalMatrix inverse_intersection(const ResolutionData& r);
/// Leading principal minors of a square matrix.
std::vector<Rational> leading_minors(const RationalMatrix& a);

/// A monomial scale * t^exponent in several variables.
struct Monomial {
  Exponent exponent;
  GClass scale;
};

/// F(q)^e = prod_k (1 - q^k)^(-e) through total degree N.
ClassSeries f_series(const Monomial& q, const std::vector<std::string>& vars, int N, const GClass& e = GClass(1));
/// G(x, y)^e = prod_{k,m >= 1} (1 - x^k y^m)^(-e) through total degree N.
ClassSeries g_series(const Monomial& x, const Monomial& y, const std::vector<std::string>& vars, int N,
                     const GClass& e = GClass(1));

/// Which exponents to apply to the F and G factors.
/// Corrected: F^[E°], G^(L-1). AsPrinted: F^-[E°], G^-(L-1).
enum class PgenSign { Corrected, AsPrinted };

/// Exponent vector of t for component s: entry j is m_{s, c(j)} where c(j)
/// is the component met by strict transform j.
std::vector<Exponent> component_exponents(const ResolutionData& r);

/// The generating series P(t_1, ..., t_r) through total degree N.
ClassSeries pgen(const ResolutionData& r, int N, PgenSign sign = PgenSign::Corrected);

/// The same product over the integers with every class replaced by its
/// Euler characteristic and ordinary integer powers.
IntegerSeries pgen_euler(const ResolutionData& r, int N, PgenSign sign = PgenSign::Corrected);

std::vector<std::string> pgen_vars(const ResolutionData& r);

/// One exceptional curve with self-intersection -1, nu = 1, [E°] = L, one arrow.
ResolutionData single_blowup_resolution();
/// Minimal embedded resolution of the cusp y^2 = x^3.
ResolutionData cusp_resolution();

}  // namespace motivic
