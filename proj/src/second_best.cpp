#include "datadump/second_best.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "datadump/roots.hpp"
#include "datadump/values.hpp"
#include "datadump/verify.hpp"

namespace datadump {

Menu menu_for_database(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const double q1_L = p.lambda <= lambda_star(db.n0, p) ? db.n1 : 0.0;
  const Database bundle_L{db.n0, q1_L};
  const double fee_L = value_L(bundle_L, p);
  const double fee_S = value_S(db, p) - value_S(bundle_L, p) + fee_L;

  Menu m;
  m.plan_S = {db.n0, db.n1, fee_S};
  m.plan_L = {db.n0, q1_L, fee_L};

  const ConstraintReport rep = check_menu_constraints(m, db, p, 1e-9);
  if (!rep.pass) throw SolveError("menu construction violated IR/IC constraints");
  return m;
}

double sb_profit(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const double pooled = value_L(db, p);
  const double discriminating =
      p.lambda * value_S(db, p) + (1.0 - p.lambda) * value_L({db.n0, 0.0}, p);
  return std::max(pooled, discriminating) - p.cost * (db.n0 + db.n1);
}

namespace {

constexpr double kRegimeEps = 1e-9;

struct Candidate {
  double n0 = 0.0, n1 = 0.0;
  double profit = 0.0;
  bool valid = false;
};

void consider(Candidate& best, double n0, double n1, const ModelParams& p) {
  const double v = sb_profit({n0, n1}, p);
  if (!best.valid || v > best.profit) best = {n0, n1, v, true};
}

// Discrimination-branch objective lambda V_S(n0,n1) + (1-lambda) V_L(n0,0)
// - c (n0+n1); concave in (n0,n1).
double disc_value(double n0, double n1, const ModelParams& p) {
  return p.lambda * value_S({n0, n1}, p) + (1.0 - p.lambda) * value_L({n0, 0.0}, p) -
         p.cost * (n0 + n1);
}

// Substituting the n1 first-order condition into the n0 one leaves a
// scalar equation whose left side is strictly decreasing in n0:
//   c s4 / E0(n0)^2 + (1-lambda) s4 / (n0 (1+s2) + 1)^2 = c.
double disc_scalar(double n0, const ModelParams& p) {
  const double s2 = p.sigma_mu_sq;
  const double s4 = s2 * s2;
  const double e0 = n0 * (1.0 + 2.0 * s2) + 1.0 + s2;
  const double m = n0 * (1.0 + s2) + 1.0;
  return p.cost * s4 / (e0 * e0) + (1.0 - p.lambda) * s4 / (m * m) - p.cost;
}

double disc_scalar_deriv(double n0, const ModelParams& p) {
  const double s2 = p.sigma_mu_sq;
  const double s4 = s2 * s2;
  const double e0 = n0 * (1.0 + 2.0 * s2) + 1.0 + s2;
  const double m = n0 * (1.0 + s2) + 1.0;
  return -2.0 * p.cost * s4 * (1.0 + 2.0 * s2) / (e0 * e0 * e0) -
         2.0 * (1.0 - p.lambda) * s4 * (1.0 + s2) / (m * m * m);
}

// n1 that satisfies the discrimination n1 first-order condition at n0.
double disc_n1_given_n0(double n0, const ModelParams& p) {
  const double s2 = p.sigma_mu_sq;
  const double e0 = n0 * (1.0 + 2.0 * s2) + 1.0 + s2;
  const double m = n0 * (1.0 + s2) + 1.0;
  return std::sqrt(p.lambda / p.cost) - m / e0;
}

// Discrimination-branch candidates: interior root of the scalar
// equation, the n0 = 0 corner, or nothing (branch infeasible).
void disc_candidates(Candidate& best, const ModelParams& p, bool diagonal_only) {
  const double s2 = p.sigma_mu_sq;

  if (diagonal_only) {
    // Constrained restriction to n0 = n1, still concave in one variable.
    auto g = [&](double n) { return disc_value(n, n, p); };
    const double hi = num::grow_until(
        [&](double h) { return g(h) < g(0.0) || g(h) < g(0.5 * h); }, 4.0 / std::sqrt(p.cost));
    const double n = num::golden_max(g, 0.0, hi, 1e-12 * (1.0 + hi));
    consider(best, n, n, p);
    return;
  }

  // Corner n0 = 0: the n1 condition alone pins n1.
  const double n1_corner = std::sqrt(p.lambda / p.cost) - 1.0 / (1.0 + s2);
  if (n1_corner > 0.0) consider(best, 0.0, n1_corner, p);

  // Interior: the scalar equation has a root iff its left side is
  // positive at n0 = 0 (it is strictly decreasing).
  if (disc_scalar(0.0, p) > 0.0) {
    double hi = num::grow_until([&](double h) { return disc_scalar(h, p) < 0.0; },
                                s2 / std::sqrt(p.cost) + 1.0);
    double n0 = num::bisect_decreasing([&](double x) { return disc_scalar(x, p); }, 0.0, hi,
                                       1e-12 * (1.0 + hi));
    const double d = disc_scalar_deriv(n0, p);
    if (std::isfinite(d) && d < 0.0) {
      const double polished = n0 - disc_scalar(n0, p) / d;
      if (polished >= 0.0 && std::isfinite(polished)) n0 = polished;
    }
    const double n1 = disc_n1_given_n0(n0, p);
    if (n1 >= 0.0) consider(best, n0, n1, p);
    // Negative n1 means the branch cannot hold its own first-order
    // conditions; the corner and pooling candidates cover it.
  }
}

}  // namespace

SecondBestSolution solve_second_best(const ModelParams& p, bool markov_constraint,
                                     double tol) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  const double s2 = p.sigma_mu_sq;
  const double s4 = s2 * s2;

  SecondBestSolution sol;

  // Shutdown: marginal value of the very first data point in every
  // branch is below cost (pooling: s4; discrimination: lambda (1+s2)^2
  // for current data).
  const double disc_origin_marginal = p.lambda * (1.0 + s2) * (1.0 + s2);
  if (p.cost >= s4 && p.cost >= disc_origin_marginal) {
    sol.db = {0.0, 0.0};
    sol.menu = menu_for_database(sol.db, p);
    sol.profit = 0.0;
    sol.regime = SbRegime::Shutdown;
    sol.lambda_star_at_solution = lambda_star(0.0, p);
    return sol;
  }

  Candidate best;
  // Pooling branch: V_L - c (n0+n1) is symmetric and concave with a
  // closed-form symmetric optimum.
  const double n_pool = std::max(0.0, (s2 / std::sqrt(p.cost) - 1.0) / (1.0 + 2.0 * s2));
  consider(best, n_pool, n_pool, p);

  disc_candidates(best, p, /*diagonal_only=*/false);
  consider(best, 0.0, 0.0, p);
  if (!best.valid) throw SolveError("second-best solver found no candidate");

  if (markov_constraint && best.n0 > best.n1) {
    // Re-optimize with the stationarity constraint n0 <= n1: the pooling
    // optimum is symmetric already; the discrimination branch restricts
    // to its diagonal and its feasible corner.
    Candidate constrained;
    consider(constrained, n_pool, n_pool, p);
    const double n1_corner = std::sqrt(p.lambda / p.cost) - 1.0 / (1.0 + s2);
    if (n1_corner > 0.0) consider(constrained, 0.0, n1_corner, p);
    disc_candidates(constrained, p, /*diagonal_only=*/true);
    consider(constrained, 0.0, 0.0, p);
    best = constrained;
  }

  sol.db = {best.n0, best.n1};
  sol.profit = best.profit;
  sol.lambda_star_at_solution = lambda_star(best.n0, p);
  sol.menu = menu_for_database(sol.db, p);
  if (best.n0 <= kRegimeEps && best.n1 <= kRegimeEps && best.profit <= 0.0)
    sol.regime = SbRegime::Shutdown;
  else if (p.lambda <= sol.lambda_star_at_solution)
    sol.regime = SbRegime::Pooling;
  else if (best.n0 <= kRegimeEps)
    sol.regime = SbRegime::DiscriminationCornerN0Zero;
  else
    sol.regime = SbRegime::Discrimination;
  return sol;
}

DistortionReport compare_fb_sb(const ModelParams& p) {
  DistortionReport rep;
  rep.fb = solve_first_best(p);
  rep.sb = solve_second_best(p);
  rep.delta_n0 = rep.sb.db.n0 - rep.fb.db.n0;
  rep.delta_n1 = rep.sb.db.n1 - rep.fb.db.n1;
  rep.delta_total = rep.sb.db.total() - rep.fb.db.total();
  rep.composition_reversed = rep.sb.db.n0 > rep.sb.db.n1;
  rep.prop3_applicable =
      rep.fb.regime == FbRegime::Interior &&
      (rep.sb.regime == SbRegime::Discrimination ||
       rep.sb.regime == SbRegime::DiscriminationCornerN0Zero);
  rep.prop3_satisfied =
      !rep.prop3_applicable || (rep.delta_n0 > -1e-8 && rep.delta_n1 < 1e-8);
  return rep;
}

std::vector<SweepRow> sweep(const ModelParams& base, SweepAxis axis,
                            std::span<const double> grid, bool markov, ExecMode mode) {
  base.validate();
  std::vector<ModelParams> params(grid.size(), base);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    switch (axis) {
      case SweepAxis::Lambda: params[i].lambda = grid[i]; break;
      case SweepAxis::Cost: params[i].cost = grid[i]; break;
      case SweepAxis::SigmaMuSq: params[i].sigma_mu_sq = grid[i]; break;
    }
    params[i].validate();  // reject bad grid values before any work
  }

  std::vector<SweepRow> rows(grid.size());
  exec::indexed_for(static_cast<std::int64_t>(grid.size()), mode, [&](std::int64_t i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.axis_value = grid[static_cast<std::size_t>(i)];
    try {
      row.fb = solve_first_best(params[static_cast<std::size_t>(i)]);
      row.sb = solve_second_best(params[static_cast<std::size_t>(i)], markov);
      row.converged = true;
    } catch (const SolveError&) {
      row.converged = false;
    }
  });
  return rows;
}

namespace {

// Solves h(n1) = level for n1 >= 0 where h is continuous and strictly
// decreasing with limit `tail` as n1 -> infinity. NaN when out of range.
template <typename H>
double invert_decreasing(H h, double level, double tail) {
  if (!(h(0.0) >= level) || !(level > tail))
    return std::numeric_limits<double>::quiet_NaN();
  const double hi = num::grow_until([&](double x) { return h(x) < level; }, 1.0);
  return num::bisect_decreasing([&](double x) { return h(x) - level; }, 0.0, hi, 1e-12);
}

}  // namespace

IsoMarginalCurves iso_marginal_curves(const ModelParams& p, double level,
                                      std::span<const double> n0_grid) {
  p.validate();
  if (!(std::isfinite(level) && level > 0.0))
    throw std::invalid_argument("level must be finite and > 0");

  const double lam = p.lambda;
  const double s2 = p.sigma_mu_sq;
  const double s4 = s2 * s2;

  IsoMarginalCurves out;
  out.n0.assign(n0_grid.begin(), n0_grid.end());
  out.f0.resize(n0_grid.size());
  out.f1.resize(n0_grid.size());
  out.g0.resize(n0_grid.size());
  out.g1.resize(n0_grid.size());

  for (std::size_t i = 0; i < n0_grid.size(); ++i) {
    const double n0 = n0_grid[i];
    Database probe{n0, 0.0};
    probe.validate();

    auto wf1 = [&](double n1) {
      const ValueGradients g = grad_values({n0, n1}, p);
      return (1.0 - lam) * g.vL.dn1 + lam * g.vS.dn1;
    };
    auto wf0 = [&](double n1) {
      const ValueGradients g = grad_values({n0, n1}, p);
      return (1.0 - lam) * g.vL.dn0 + lam * g.vS.dn0;
    };
    const double gl0_at_zero = grad_values({n0, 0.0}, p).vL.dn0;
    auto wg1 = [&](double n1) { return lam * grad_values({n0, n1}, p).vS.dn1; };
    auto wg0 = [&](double n1) {
      return (1.0 - lam) * gl0_at_zero + lam * grad_values({n0, n1}, p).vS.dn0;
    };

    // n1 -> infinity limits of each left side.
    const double e0 = n0 * (1.0 + 2.0 * s2) + 1.0 + s2;
    const double f0_tail = (1.0 - lam) * s4 / (e0 * e0);
    const double g0_tail = (1.0 - lam) * gl0_at_zero;

    out.f1[i] = invert_decreasing(wf1, level, 0.0);
    out.f0[i] = invert_decreasing(wf0, level, f0_tail);
    out.g1[i] = invert_decreasing(wg1, level, 0.0);
    out.g0[i] = invert_decreasing(wg0, level, g0_tail);
  }
  return out;
}

}  // namespace datadump
