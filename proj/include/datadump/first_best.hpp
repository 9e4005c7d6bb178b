#pragma once

#include "datadump/types.hpp"

namespace datadump {

enum class FbRegime { Interior, CornerN0Zero, Shutdown };

/// Full-information optimum: database, profit and the type-specific
/// fees that extract each type's entire willingness to pay.
struct FirstBestSolution {
  Database db;
  double profit = 0.0;
  FbRegime regime = FbRegime::Shutdown;
  double fee_S = 0.0;  ///< V_S at the optimal database
  double fee_L = 0.0;  ///< V_L at the optimal database

  /// Weakly more current than historical data; strict when n0 > 0.
  bool ordering_holds() const { return db.n1 >= db.n0; }
};

/// Full-information profit: lambda V_S + (1 - lambda) V_L - c (n0 + n1).
double fb_profit(const Database& db, const ModelParams& p);

/// Maximizes fb_profit over the nonnegative quadrant. The objective is
/// strictly concave, so the optimum is unique; it is located by damped
/// projected Newton from three starts (symmetric closed form, the n0 = 0
/// corner, coarse grid best) with KKT verification at zero coordinates.
/// tol bounds the projected-gradient max-norm at the solution.
FirstBestSolution solve_first_best(const ModelParams& p, double tol = 1e-9);

}  // namespace datadump
