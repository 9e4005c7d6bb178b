#pragma once

#include <stdexcept>
#include <string>

namespace datadump {

/// Environment constants of the two-type data-access model.
///
/// The per-observation noise variance is normalized to 1 internally, so
/// sample sizes are measured in multiples of it; use
/// normalized_sample_size() to convert raw sizes recorded against a
/// different noise variance.
struct ModelParams {
  double sigma_mu_sq = 1.0;  ///< variance of the long-run parameter, > 0
  double cost = 0.04;        ///< storage cost per data point, > 0
  double lambda = 0.5;       ///< population share of nowcasters, in [0, 1]

  void validate() const;
};

/// Curated sample sizes: n0 historical observations, n1 current ones.
/// Sizes are continuous; any nonnegative real is valid.
struct Database {
  double n0 = 0.0;
  double n1 = 0.0;

  void validate() const;
  double total() const { return n0 + n1; }
};

/// Maps a raw sample size measured against noise variance sigma_eps_sq
/// to the normalized units used by every formula in this library
/// (a redefinition of the unit of database size).
double normalized_sample_size(double raw_n, double sigma_eps_sq);

/// One menu entry: access levels to each period's sample plus a fee.
struct AccessPlan {
  double q0 = 0.0;
  double q1 = 0.0;
  double fee = 0.0;
};

/// Two-plan screening menu, one access plan per user type.
struct Menu {
  AccessPlan plan_S;  ///< offered to nowcasters
  AccessPlan plan_L;  ///< offered to forecasters
};

struct Gradient2 {
  double dn0 = 0.0;
  double dn1 = 0.0;
};

/// Symmetric 2x2 matrix of second partials, stored as its three
/// distinct entries.
struct Hessian2 {
  double dn0n0 = 0.0;
  double dn0n1 = 0.0;
  double dn1n1 = 0.0;

  double det() const { return dn0n0 * dn1n1 - dn0n1 * dn0n1; }
  bool negative_definite() const { return dn0n0 < 0.0 && det() > 0.0; }
};

/// Thrown when an iterative routine exhausts its budget or a
/// conditioning matrix is numerically singular.
struct SolveError : std::runtime_error {
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace datadump
