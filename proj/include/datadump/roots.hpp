#pragma once

#include <cmath>
#include <utility>

#include "datadump/types.hpp"

namespace datadump::num {

/// Root of a strictly decreasing function on [lo, hi] by bisection.
/// Requires f(lo) >= 0 >= f(hi); converges to |hi - lo| <= xtol.
template <typename F>
double bisect_decreasing(F f, double lo, double hi, double xtol, int max_iter = 200) {
  double flo = f(lo);
  if (flo < 0.0) return lo;
  for (int it = 0; it < max_iter && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Doubles hi until pred(hi) holds; throws if it never does.
template <typename Pred>
double grow_until(Pred pred, double hi, int max_doublings = 200) {
  for (int it = 0; it < max_doublings; ++it) {
    if (pred(hi)) return hi;
    hi *= 2.0;
  }
  throw SolveError("bracket expansion failed");
}

/// Maximizer of a unimodal function on [lo, hi] by golden-section search.
template <typename F>
double golden_max(F f, double lo, double hi, double xtol, int max_iter = 400) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && b - a > xtol; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

struct Newton2Result {
  double x0 = 0.0;
  double x1 = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Maximizes a smooth strictly concave objective over the nonnegative
/// quadrant by damped Newton steps with projection. Convergence is
/// declared when the projected gradient's max-norm drops below grad_tol.
///
/// obj(x0, x1) -> double; grad(x0, x1) -> {g0, g1};
/// hess(x0, x1) -> {h00, h01, h11}.
template <typename Obj, typename Grad, typename Hess>
Newton2Result newton2_box_max(Obj obj, Grad grad, Hess hess, double x0, double x1,
                              double grad_tol, int max_iter = 200) {
  auto proj = [](double v) { return v > 0.0 ? v : 0.0; };
  x0 = proj(x0);
  x1 = proj(x1);
  double f = obj(x0, x1);

  Newton2Result res;
  for (int it = 0; it < max_iter; ++it) {
    const auto [g0, g1] = grad(x0, x1);
    const double pg0 = x0 > 0.0 ? g0 : std::max(g0, 0.0);
    const double pg1 = x1 > 0.0 ? g1 : std::max(g1, 0.0);
    if (std::max(std::fabs(pg0), std::fabs(pg1)) <= grad_tol) {
      res = {x0, x1, true, it};
      return res;
    }

    const auto [h00, h01, h11] = hess(x0, x1);
    const double det = h00 * h11 - h01 * h01;
    double s0, s1;
    if (std::fabs(det) > 1e-300) {
      // Newton direction -H^{-1} g (ascent for negative definite H)
      s0 = -(h11 * g0 - h01 * g1) / det;
      s1 = -(-h01 * g0 + h00 * g1) / det;
    } else {
      s0 = g0;
      s1 = g1;
    }
    if (s0 * g0 + s1 * g1 <= 0.0) {  // not an ascent direction; fall back
      s0 = g0;
      s1 = g1;
    }

    double step = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 70; ++ls) {
      const double t0 = proj(x0 + step * s0);
      const double t1 = proj(x1 + step * s1);
      const double ft = obj(t0, t1);
      if (ft >= f || (t0 == x0 && t1 == x1)) {
        if (t0 == x0 && t1 == x1 && ft <= f && ls > 0) break;
        x0 = t0;
        x1 = t1;
        f = ft;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No ascent found at machine resolution: report current point.
      const auto [q0, q1] = grad(x0, x1);
      const double r0 = x0 > 0.0 ? q0 : std::max(q0, 0.0);
      const double r1 = x1 > 0.0 ? q1 : std::max(q1, 0.0);
      res = {x0, x1, std::max(std::fabs(r0), std::fabs(r1)) <= grad_tol * 16.0, it};
      return res;
    }
  }
  res = {x0, x1, false, max_iter};
  return res;
}

}  // namespace datadump::num
