#include "motivic/lifting.hpp"

#include <bit>

namespace motivic {

namespace {

constexpr long kMaxShear = 16;

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

bool same_jet(const RationalSeries& a, const RationalSeries& b, int n) { return a.agrees_through(b, n); }

}  // namespace

LiftReport lift_arc(const PlanePoly& f, const Branch& g, int target, LiftMode mode) {
  if (target < 1) throw Error(ErrorKind::InvalidInput, "lifting target must be positive");
  LiftReport rep;
  rep.target = target;
  rep.m = order_v(g);
  const PlanePoly fx = f.dx(), fy = f.dy();
  const Branch g0 = g.at_level(std::max(target, 1) * 4 + 8);
  const int ox = fx.eval(g0).order(), oy = fy.eval(g0).order();
  if (std::min(ox, oy) > g0.trunc())
    throw Error(ErrorKind::HypothesisViolated, "both partial derivatives vanish along the arc");
  rep.Q = std::min(ox, oy);
  if (oy != rep.Q)
    throw Error(ErrorKind::HypothesisViolated,
                "ord f_y = " + std::to_string(oy) + " exceeds ord f_x = " + std::to_string(ox) + "; rotate coordinates first");
  const int Q = rep.Q;
  const int work = target + Q + 1;
  // The arc is treated as the polynomial it stores; corrections are cut at
  // `work`, which only perturbs f(gamma) beyond the target.
  RationalSeries x = g.x.as_exact(work);
  RationalSeries y = g.y.as_exact(work);
  const int ord0 = f.eval(x, y).order();
  rep.n = (ord0 - 1) / rep.m;
  rep.n1 = rep.m * rep.n - Q;
  if (ord0 <= target) {
    if (mode == LiftMode::Strict && rep.n <= 4 * Q)
      throw Error(ErrorKind::HypothesisViolated, "need n > 4Q, got n = " + std::to_string(rep.n) +
                                                     ", Q = " + std::to_string(Q));
    if (ord0 <= 2 * Q)
      throw Error(ErrorKind::HypothesisViolated, "need ord f(g) > 2Q, got " + std::to_string(ord0) +
                                                     " with Q = " + std::to_string(Q));
  }
  const int cap = ceil_log2(target) + 4;
  rep.quadratic = true;
  for (int k = 0;; ++k) {
    const RationalSeries F = f.eval(x, y);
    const int o = F.order();
    if (!rep.iterations.empty()) {
      const int prev = rep.iterations.back().order;
      if (o <= prev) throw Error(ErrorKind::StalledIteration, "order of f(gamma) stopped growing");
      if (o <= work && o < 2 * (prev - Q)) rep.quadratic = false;
    }
    rep.iterations.push_back({k, o, o > work});
    if (o > target) break;
    if (k >= cap) throw Error(ErrorKind::StalledIteration, "iteration cap reached");
    const RationalSeries D = fy.eval(x, y);
    if (D.order() != Q) throw Error(ErrorKind::StalledIteration, "ord f_y changed along the iteration");
    const RationalSeries corr = F.shift_down(Q) * recip(D.shift_down(Q));
    y = (y - corr.as_exact(work)).as_exact(work);
  }
  rep.lifted = Branch{x.truncated(target), y.truncated(target), false};
  rep.jet_preserved = rep.n1 < 0 || (same_jet(rep.lifted.x, g.x, std::min(rep.n1, g.trunc())) &&
                                     same_jet(rep.lifted.y, g.y, std::min(rep.n1, g.trunc())));
  return rep;
}

Rotation rotate_coords(const PlanePoly& f, const Branch& g) {
  const Branch b = g.at_level(g.exact ? std::max(64, 2 * g.max_degree()) : g.trunc());
  for (long c = 0; c <= kMaxShear; ++c) {
    const PlanePoly fc = f.shear(Rational(c));
    const Branch gc{b.x - Rational(c) * b.y, b.y, b.exact};
    const int ox = fc.dx().eval(gc).order(), oy = fc.dy().eval(gc).order();
    if (std::min(ox, oy) > gc.trunc()) break;
    if (oy <= ox) return Rotation{fc, Branch{g.x - Rational(c) * g.y, g.y, g.exact}, c};
  }
  throw Error(ErrorKind::NoSuitableRotation, "no shear c <= " + std::to_string(kMaxShear) + " normalizes f_y");
}

}  // namespace motivic
