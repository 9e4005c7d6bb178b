#pragma once

#include <span>
#include <vector>

#include "datadump/exec.hpp"
#include "datadump/first_best.hpp"
#include "datadump/types.hpp"

namespace datadump {

enum class SbRegime { Pooling, Discrimination, DiscriminationCornerN0Zero, Shutdown };

/// Second-best optimum: database, screening menu, profit and the
/// discrimination threshold evaluated at the solution.
struct SecondBestSolution {
  Database db;
  Menu menu;
  double profit = 0.0;
  SbRegime regime = SbRegime::Shutdown;
  double lambda_star_at_solution = 0.0;
};

/// Profit-maximizing menu for a fixed database: everyone gets full
/// historical access, nowcasters get full current access, forecasters
/// get all of it or none of it depending on lambda vs lambda*(n0).
/// Fees make IR of the forecaster and IC of the nowcaster bind.
Menu menu_for_database(const Database& db, const ModelParams& p);

/// Optimal-menu profit for a fixed database:
/// max{ V_L(n0,n1), lambda V_S(n0,n1) + (1-lambda) V_L(n0,0) } - c (n0+n1).
double sb_profit(const Database& db, const ModelParams& p);

/// Maximizes sb_profit over databases. Each branch of the inner max is
/// concave and solved separately: the pooling branch by its symmetric
/// closed form, the discrimination branch by reducing the two first-order
/// conditions to one scalar equation in n0 (bracketing bisection plus a
/// Newton polish) with corner and infeasibility fallbacks. With
/// markov_constraint set, the returned database satisfies n0 <= n1,
/// re-optimizing any violating branch on the diagonal.
SecondBestSolution solve_second_best(const ModelParams& p, bool markov_constraint = false,
                                     double tol = 1e-9);

/// Side-by-side distortion diagnostics of second best vs first best.
struct DistortionReport {
  FirstBestSolution fb;
  SecondBestSolution sb;
  double delta_n0 = 0.0;     ///< n0' - n0*
  double delta_n1 = 0.0;     ///< n1' - n1*
  double delta_total = 0.0;  ///< (n0'+n1') - (n0*+n1*)
  bool composition_reversed = false;  ///< n0' > n1'
  bool prop3_applicable = false;  ///< first best interior and second best discriminates
  bool prop3_satisfied = true;    ///< delta_n0 > 0 and delta_n1 < 0 (1e-8 slack) when applicable
};
DistortionReport compare_fb_sb(const ModelParams& p);

enum class SweepAxis { Lambda, Cost, SigmaMuSq };

struct SweepRow {
  double axis_value = 0.0;
  bool converged = false;
  FirstBestSolution fb;
  SecondBestSolution sb;
};

/// Solves both problems at every grid value of the chosen axis. Rows are
/// computed independently (in parallel) and returned in input order;
/// rows whose solver fails are flagged, not dropped.
std::vector<SweepRow> sweep(const ModelParams& base, SweepAxis axis,
                            std::span<const double> grid, bool markov = false,
                            ExecMode mode = ExecMode::Parallel);

/// Sampled iso-marginal value curves: for each n0, the n1 at which the
/// weighted marginal value equals `level`. f0/f1 use the full-information
/// weighting, g0/g1 the discrimination weighting. Entries are NaN where
/// no nonnegative n1 solves the equation.
struct IsoMarginalCurves {
  std::vector<double> n0;
  std::vector<double> f0, f1, g0, g1;
};
IsoMarginalCurves iso_marginal_curves(const ModelParams& p, double level,
                                      std::span<const double> n0_grid);

}  // namespace datadump
