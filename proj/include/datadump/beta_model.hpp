#pragma once

#include <array>

#include "datadump/types.hpp"

namespace datadump {

/// Four-type variant: types beta in {r, s, 1-s, 1-r} target the convex
/// combination beta*theta0 + (1-beta)*theta1 of two independent N(0,1)
/// parameters, each observed through its own sample with noise variance
/// sigma_sq. Narrow types (r, 1-r) value symmetric databases more than
/// broad types (s, 1-s).
struct BetaParams {
  double r = 0.1;         ///< narrow type location, 0 < r < s
  double s = 0.4;         ///< broad type location, s < 1/2
  double p_r = 0.25;      ///< probability of each narrow type, in (0, 1/2)
  double sigma_sq = 1.0;  ///< observation noise variance, > 0
  double cost = 0.01;     ///< storage cost per data point, > 0

  void validate() const;

  double p_s() const { return 0.5 - p_r; }
  /// beta^2 + (1-beta)^2, the per-type weight on a symmetric database.
  static double pair_weight(double beta) { return beta * beta + (1.0 - beta) * (1.0 - beta); }
  double k_r() const { return pair_weight(r); }
  double k_s() const { return pair_weight(s); }
};

/// Willingness to pay of type beta for database (n0, n1):
/// beta^2 n0/(n0+sigma^2) + (1-beta)^2 n1/(n1+sigma^2).
double u_beta(double beta, const Database& db, const BetaParams& bp);

struct BetaFirstBest {
  double n_star = 0.0;      ///< symmetric per-component size N*
  double profit = 0.0;
  double fee_narrow = 0.0;  ///< U_r(N*, N*), extracted from types r and 1-r
  double fee_broad = 0.0;   ///< U_s(N*, N*), extracted from types s and 1-s
};

/// Full-information optimum: symmetric database with everyone served at
/// full access. N* solves W sigma^2 / (N + sigma^2)^2 = c with
/// W = p_r K_r + p_s K_s (clamped at zero when c is too large).
BetaFirstBest solve_beta_first_best(const BetaParams& bp, double tol = 1e-9);

enum class BetaRegime { FullAccess, Exclusion };

/// Screening optimum of the four-type model: a symmetric database of
/// per-component size N** < N*, full access for the narrow types, and
/// bang-bang access Q in {0, N**} for the broad types.
struct BetaSolution {
  double n_store = 0.0;     ///< N**, per-component database size
  double q_broad = 0.0;     ///< Q, broad types' access (0 or n_store)
  double fee_narrow = 0.0;  ///< t(r) = t(1-r)
  double fee_broad = 0.0;   ///< t(s) = t(1-s); zero under exclusion
  BetaRegime regime = BetaRegime::FullAccess;
  double first_best_n = 0.0;
  double profit = 0.0;
};

/// Broad types keep full access iff 2 p_r <= K_s / K_r (ties go to full
/// access); otherwise they are excluded. N** solves the one-dimensional
/// first-order condition of the reduced problem with Q substituted.
BetaSolution solve_beta_second_best(const BetaParams& bp, double tol = 1e-9);

/// One access bundle plus fee in the four-type menu.
struct BetaPlan {
  double q0 = 0.0;
  double q1 = 0.0;
  double fee = 0.0;
};

/// Menu entries ordered as {r, s, 1-s, 1-r}.
using BetaMenu = std::array<BetaPlan, 4>;

/// The four-type menu induced by a BetaSolution.
BetaMenu beta_menu(const BetaSolution& sol);

/// Slacks of every participation and truth-telling constraint of the
/// four-type menu (4 IR + 12 IC), plus feasibility against (N, N).
struct BetaConstraintSlacks {
  std::array<double, 4> ir{};    ///< by type order {r, s, 1-s, 1-r}
  std::array<double, 12> ic{};   ///< type i vs each other type, row-major
  double feasibility = 0.0;      ///< min over plans of q >= 0 and N - q >= 0
  double min_slack = 0.0;
};
BetaConstraintSlacks beta_constraint_slacks(const BetaMenu& menu, double n_store,
                                            const BetaParams& bp);

}  // namespace datadump
