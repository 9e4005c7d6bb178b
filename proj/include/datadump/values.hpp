#pragma once

#include "datadump/types.hpp"

namespace datadump {

// Willingness to pay of each user type for access to a database,
// measured as the reduction in the posterior variance of the type's
// prediction target. Closed rational forms; the independent
// re-derivations live in posterior.hpp.

/// Forecaster value V_L(n0, n1): symmetric in (n0, n1), in [0, sigma_mu_sq).
double value_L(const Database& db, const ModelParams& p);

/// Nowcaster value V_S(n0, n1): equals value_L when n1 == 0, strictly
/// larger otherwise; in [0, sigma_mu_sq + 1).
double value_S(const Database& db, const ModelParams& p);

/// Valuation gap Delta = V_S - V_L. Nonnegative; zero iff n1 == 0.
/// Increasing in n1 and strictly decreasing in n0 when n1 > 0.
double value_delta(const Database& db, const ModelParams& p);

struct ValueGradients {
  Gradient2 vL;
  Gradient2 vS;
};

/// First partials of both value functions. All four are strictly positive.
ValueGradients grad_values(const Database& db, const ModelParams& p);

struct ValueHessians {
  Hessian2 vL;
  Hessian2 vS;
};

/// Second partials of both value functions; each Hessian is negative
/// definite everywhere.
ValueHessians hessians(const Database& db, const ModelParams& p);

/// Discrimination threshold lambda*(n0) in (0, 1): with a fraction of
/// nowcasters above it, forecasters are denied current data. Equals the
/// ratio of the two types' marginal values of current-data access, which
/// is independent of the access level. Decreasing in n0.
double lambda_star(double n0, const ModelParams& p);

/// Limits of lambda*: at n0 = 0 (upper) and n0 -> infinity (lower).
double lambda_star_lower_bound(const ModelParams& p);
double lambda_star_upper_bound(const ModelParams& p);

}  // namespace datadump
