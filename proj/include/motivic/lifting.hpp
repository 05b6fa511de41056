#pragma once

#include <vector>

#include "motivic/curves.hpp"

namespace motivic {

/// Strict requires n > 4Q where ord f(g) > m*n; Relaxed only requires
/// ord f(g) > 2Q, which is what the Newton step itself needs to gain order.
enum class LiftMode { Strict, Relaxed };

struct LiftStep {
  int index;
  int order;      ///< ord f(gamma_k)
  bool vanished;  ///< f(gamma_k) is zero through the working precision; order is then a lower bound
};

struct LiftReport {
  Branch lifted;
  std::vector<LiftStep> iterations;
  int m = 0;
  int Q = 0;
  int n = 0;
  int n1 = 0;
  int target = 0;
  bool jet_preserved = false;
  bool quadratic = false;
};

/// Newton iteration gamma_{k+1} = gamma_k - (0, f/f_y) until
/// f(gamma) = 0 mod t^(target+1). Requires ord f_y(g) = Q.
LiftReport lift_arc(const PlanePoly& f, const Branch& g, int target, LiftMode mode = LiftMode::Strict);

struct Rotation {
  PlanePoly f;
  Branch g;
  long c = 0;
};
/// Shear f'(x, y) = f(x + c y, y), g' = (x - c y, y) with the smallest
/// c = 0, 1, 2, ... such that ord f'_y(g') = min(ord f'_x(g'), ord f'_y(g')).
Rotation rotate_coords(const PlanePoly& f, const Branch& g);

}  // namespace motivic
