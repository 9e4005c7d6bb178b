#pragma once

#include <cstdint>

#include "datadump/exec.hpp"
#include "datadump/types.hpp"

namespace datadump {

/// Which prediction target a user cares about: nowcasters predict the
/// current value (long-run parameter plus the current period shock),
/// forecasters predict the long-run parameter alone.
enum class TargetKind { Nowcaster, Forecaster };

struct McConfig {
  std::uint64_t draws = 1'000'000;
  std::uint64_t seed = 0;
  ExecMode mode = ExecMode::Parallel;

  void validate() const;
};

/// Variance reduction of the target obtained by joint-normal
/// conditioning on the two sample means: builds the covariance matrix of
/// (target, ybar0, ybar1), inverts the signal block and evaluates
/// b A^{-1} b'. Zero-size components degrade to one- or zero-signal
/// conditioning. Agrees with value_L / value_S to machine precision.
double conditional_value_via_covariance(TargetKind target, const Database& db,
                                        const ModelParams& p);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Simulates the prediction problem draw by draw: samples the latent
/// variables, forms the sample-mean signals, conditions on them with
/// weights taken from the EMPIRICAL covariance across draws (two-pass),
/// and reports the mean squared-error reduction of the Bayes action
/// against the prior action a = 0, with its sample standard error.
///
/// The estimator never touches the closed forms; it is an independent
/// Monte Carlo check of them. Fixed (seed, draws) reproduce
/// bit-identically in either ExecMode.
McEstimate monte_carlo_value(TargetKind target, const Database& db, const ModelParams& p,
                             const McConfig& cfg);

}  // namespace datadump
