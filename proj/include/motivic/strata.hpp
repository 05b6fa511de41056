#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "motivic/curves.hpp"
#include "motivic/gclass.hpp"

namespace motivic {

enum class Ambient { Arc, Function };

/// Constraint on a group of coordinates that is not a product of
/// per-coordinate conditions.
struct BlockConstraint {
  enum class Kind { NotAllZero, SquarefreeForm };
  Kind kind;
  std::vector<int> coords;  ///< NotAllZero: the coordinates involved
  int degree = 0;           ///< SquarefreeForm: binary form of this degree (function space only)
};

/// Cylinder set of n-jets given by coordinate conditions.
///
/// Arc space at level n has coordinates x_1..x_n (indices 0..n-1) followed by
/// y_1..y_n (indices n..2n-1). Function space at level n has the monomials
/// x^i y^j with 1 <= i+j <= n, by degree and then by ascending j.
struct JetStratum {
  Ambient ambient = Ambient::Arc;
  int n = 1;
  std::set<int> zero;
  std::set<int> nonzero;
  std::vector<BlockConstraint> blocks;
  std::vector<GClass> multipliers;

  int dim() const;
  void validate() const;
  /// The same cylinder described at level m >= n.
  JetStratum padded(int m) const;
  std::string describe() const;
};

int arc_dim(int n);
int fun_dim(int n);
/// Arc coordinate index of x_i (axis 'x') or y_i (axis 'y') at level n.
int arc_coord(char axis, int i, int n);
/// Function-space index of x^i y^j.
int fun_coord(int i, int j);
/// Indices of the degree-d monomials, x^d first.
std::vector<int> fun_degree_coords(int d);

/// [A_n] as a class.
GClass stratum_class(const JetStratum& s);
/// [A_n] L^(-2n).
GClass measure_arc_stratum(const JetStratum& s);
/// [A_n] L^(-D), D = (n+1)(n+2)/2 - 1; the whole space has measure 1.
GClass measure_fun_stratum(const JetStratum& s);
GClass measure(const JetStratum& s);

/// Brute-force count of n-jets over F_q (q prime) satisfying the constraints.
/// TooLarge if q^dim > 5^12, NotEnumerable if the stratum carries multipliers.
std::uint64_t ff_point_count(const JetStratum& s, unsigned q, unsigned threads = 1);

/// Number of squarefree effective divisors of degree k on P^1 over F_q,
/// by enumerating monic polynomials.
std::uint64_t ff_config_count_p1(int k, unsigned q);

/// Class of unordered k-tuples of distinct points on P^1.
GClass config_class_p1(int k);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct ExampleResult {
  GClass muM;
  GClass muN;
  std::vector<Check> checks;
};

JetStratum example1_stratum(int k);
JetStratum example2_even_stratum(int k);
JetStratum example2_odd_stratum(int k);
JetStratum a1_stratum();
JetStratum example2_direct_stratum();
JetStratum example3_stratum(int p, int q);
JetStratum example4_stratum(int i, int j);

/// Representative germs for the correspondence factor.
CurveGerm example1_germ(int k);
CurveGerm example2_even_germ(int k);
CurveGerm example2_odd_germ(int k);
CurveGerm example3_germ(int p, int q);

/// (L - 1) L^(delta - k - P) muM.
GClass theorem1_transform(const GClass& muM, const CurveGerm& g);

ExampleResult example1(int k);
ExampleResult example2(int k, bool even);
ExampleResult example_a1();

struct Example2Sum {
  GClass series_sum;
  GClass direct;
  std::vector<Check> checks;
};
Example2Sum example2_sum();

struct Example3Result {
  GClass muM;
  GClass muN;
  GClass muN_single_factor;  ///< (L+1)(L-1) L^([q/p]-1-(p+1)(q+1)/2)
  long c;
  Rational modality;
  long kouchnirenko;
  std::vector<Check> checks;
};
Example3Result example3(int p, int q);
long kouchnirenko_count(int p, int q);
Rational modality_formula(int p, int q);

struct Example4Result {
  GClass measure;
  GClass series_coefficient;
  bool equal;
};
Example4Result example4(int i, int j);

/// Strata enumerable at ambient dimension <= max_dim, for the oracle suite.
std::vector<std::pair<std::string, JetStratum>> ff_suite(int max_dim);

}  // namespace motivic
