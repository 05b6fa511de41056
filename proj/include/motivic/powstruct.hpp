#pragma once

#include <string>
#include <vector>

#include "motivic/gclass.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// (1 - t)^(-m) for a Laurent polynomial m = sum_j a_j L^j, i.e.
/// prod_j (1 - t L^j)^(-a_j), through t^N.
ClassSeries one_minus_t_pow(const GClass& m, int N, const std::string& var = "t");
LaurentSeries one_minus_t_pow(const Laurent& m, int N, const std::string& var = "t");

struct CycloFactor {
  int k;
  Laurent b;
};

/// A(t) = prod_k (1 - t^k)^(-b_k) through `trunc`.
struct CycloFactorization {
  int trunc = 0;
  std::vector<CycloFactor> factors;
};

/// Peels off factors (1 - t^k)^(-b_k) for k = 1, 2, ... . A must have
/// constant term 1 (NonUnitLeadingTerm) and Laurent coefficients.
CycloFactorization factor_cyclo(const ClassSeries& A);
/// Multiplies the factorization back out through N.
ClassSeries expand(const CycloFactorization& f, int N, const std::string& var = "t");

/// A(t)^m in the power structure, through min(N, trunc(A)).
ClassSeries power(const ClassSeries& A, const GClass& m, int N);

/// Coefficient of t^k in (1 - t)^(-m).
GClass sym_power_class(const GClass& m, int k);

/// One level set of a simple function: its value and the Euler
/// characteristic of the set where the function takes it.
struct PartitionEntry {
  ClassSeries value;
  long weight;
};
using MeasuredPartition = std::vector<PartitionEntry>;

/// Checks values are distinct, weights nonzero, values of positive order.
void validate_partition(const MeasuredPartition& p);

/// prod_g (1 - g)^(-w_g) through t^N, ordinary integer powers.
ClassSeries chi_exp_integral(const MeasuredPartition& p, int N);

int moebius(long n);

struct Theorem3Result {
  ClassSeries lhs;
  ClassSeries rhs;
  bool equal;
};
/// lhs: prod_k prod_g (1 - g^k)^(-w_g) as one exponential integral over the
/// merged partition {(g^k, w_g)}. rhs: prod_k of the fiberwise sums
/// sum_m chi(S^m) g^(km), with chi(S^m X) = binom(chi(X)+m-1, m).
Theorem3Result theorem3_check(const MeasuredPartition& p, int N);

struct CorollaryResult {
  ClassSeries product;  ///< prod_k I_k^moebius(k)
  ClassSeries first;    ///< chi_exp_integral(p)
  bool equal;
};
/// Moebius inversion of the partition product: with I_k the lhs built from
/// values g^k, prod_k I_k^moebius(k) recovers the single integral.
CorollaryResult corollary_check(const MeasuredPartition& p, int N);

/// Coefficientwise Euler characteristic; coefficients must have integer value at L = 1.
IntegerSeries chi_image(const ClassSeries& A);

LaurentSeries to_laurent_series(const ClassSeries& A);
ClassSeries to_class_series(const LaurentSeries& A);

/// A(t^k) through N (A univariate).
template <class C>
TruncSeries<C> stretch(const TruncSeries<C>& a, int k, int N) {
  return substitute_monomial(a, a.vars(), N, Exponent{k}, C(1));
}

}  // namespace motivic
