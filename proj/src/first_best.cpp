#include "datadump/first_best.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "datadump/roots.hpp"
#include "datadump/values.hpp"

namespace datadump {

double fb_profit(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  return p.lambda * value_S(db, p) + (1.0 - p.lambda) * value_L(db, p) -
         p.cost * (db.n0 + db.n1);
}

namespace {

constexpr double kRegimeEps = 1e-9;

struct Candidate {
  double n0 = 0.0, n1 = 0.0;
  double profit = 0.0;
  bool valid = false;
};

}  // namespace

FirstBestSolution solve_first_best(const ModelParams& p, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  const double s2 = p.sigma_mu_sq;
  const double s4 = s2 * s2;
  const double lam = p.lambda;
  const double c = p.cost;

  auto obj = [&](double n0, double n1) { return fb_profit({n0, n1}, p); };
  auto grad = [&](double n0, double n1) {
    const ValueGradients g = grad_values({n0, n1}, p);
    return std::array<double, 2>{
        lam * g.vS.dn0 + (1.0 - lam) * g.vL.dn0 - c,
        lam * g.vS.dn1 + (1.0 - lam) * g.vL.dn1 - c};
  };
  auto hess = [&](double n0, double n1) {
    const ValueHessians h = hessians({n0, n1}, p);
    return std::array<double, 3>{
        lam * h.vS.dn0n0 + (1.0 - lam) * h.vL.dn0n0,
        lam * h.vS.dn0n1 + (1.0 - lam) * h.vL.dn0n1,
        lam * h.vS.dn1n1 + (1.0 - lam) * h.vL.dn1n1};
  };

  // The weighted gradient at the origin is ((1-l)s4 + l s4,
  // (1-l)s4 + l (1+s2)^2); the n1 component dominates. If storing the
  // first data point is already unprofitable, (0,0) is globally optimal.
  const double origin_marginal_n1 = (1.0 - lam) * s4 + lam * (1.0 + s2) * (1.0 + s2);
  if (c >= origin_marginal_n1) {
    FirstBestSolution sol;
    sol.db = {0.0, 0.0};
    sol.profit = 0.0;
    sol.regime = FbRegime::Shutdown;
    return sol;
  }

  // Candidate starts.
  const double n_sym = std::max(0.0, (s2 / std::sqrt(c) - 1.0) / (1.0 + 2.0 * s2));
  const double n1_corner = std::max(0.0, (std::sqrt(origin_marginal_n1 / c) - 1.0) / (1.0 + s2));

  Candidate grid_best;
  {
    const double n_max = std::max(s2, 1.0 + s2) / std::sqrt(c) + 1.0;
    constexpr int kPts = 48;
    for (int i = 0; i < kPts; ++i) {
      for (int j = 0; j < kPts; ++j) {
        const double a = n_max * i / (kPts - 1);
        const double b = n_max * j / (kPts - 1);
        const double v = obj(a, b);
        if (!grid_best.valid || v > grid_best.profit) grid_best = {a, b, v, true};
      }
    }
  }

  const std::array<std::pair<double, double>, 3> starts = {
      std::pair{n_sym, n_sym}, std::pair{0.0, n1_corner},
      std::pair{grid_best.n0, grid_best.n1}};

  Candidate best;
  for (const auto& [x0, x1] : starts) {
    const num::Newton2Result r = num::newton2_box_max(obj, grad, hess, x0, x1, tol);
    if (!r.converged) continue;
    const double v = obj(r.x0, r.x1);
    const bool better =
        !best.valid || v > best.profit ||
        (v == best.profit && std::tie(r.x0, r.x1) < std::tie(best.n0, best.n1));
    if (better) best = {r.x0, r.x1, v, true};
  }
  if (!best.valid) throw SolveError("first-best solver failed to converge");

  FirstBestSolution sol;
  sol.db = {best.n0, best.n1};
  sol.profit = best.profit;
  sol.fee_S = value_S(sol.db, p);
  sol.fee_L = value_L(sol.db, p);
  if (best.n0 <= kRegimeEps && best.n1 <= kRegimeEps)
    sol.regime = FbRegime::Shutdown;
  else if (best.n0 <= kRegimeEps)
    sol.regime = FbRegime::CornerN0Zero;
  else
    sol.regime = FbRegime::Interior;
  return sol;
}

}  // namespace datadump
