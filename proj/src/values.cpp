#include "datadump/values.hpp"

#include <cmath>

namespace datadump {
namespace {

using ld = long double;

// Above this size, products like n0*n1 are rescaled before forming the
// shared denominator so arbitrarily large (finite) inputs evaluate in
// their algebraic limit instead of overflowing.
constexpr double kBigN = 1e8;

// Every formula below is a ratio against the same denominator
//   D = sigma^2 (n0 + n1 + 2 n0 n1) + (1 + n0)(1 + n1),
// so we precompute the handful of needed numerator/D ratios once.
// E0 = n0 (1 + 2 sigma^2) + 1 + sigma^2 and E1 is its n1 counterpart.
struct Ratios {
  ld s2, s4;
  ld p_over_d;     // (n0 + n1 + 2 n0 n1) / D
  ld r_over_d;     // (3 s2 n0 n1 + 2 s2 n1 + n1 + n0 n1) / D, i.e. V_S - V_L
  ld n0p1_over_d;  // (n0 + 1) / D
  ld n1p1_over_d;  // (n1 + 1) / D
  ld one_over_d;   // 1 / D
  ld e0_over_d;    // E0 / D
  ld e1_over_d;    // E1 / D
};

Ratios ratios(const Database& db, const ModelParams& mp) {
  const ld s2 = mp.sigma_mu_sq;
  const ld n0 = db.n0;
  const ld n1 = db.n1;
  const bool big0 = db.n0 > kBigN;
  const bool big1 = db.n1 > kBigN;

  // Numerators divided by the common scale (1, n0, n1 or n0*n1).
  ld p, r, q, n0p1, n1p1, one, e0, e1;
  if (big0 && big1) {
    p = 1.0L / n0 + 1.0L / n1 + 2.0L;
    r = 3.0L * s2 + (2.0L * s2 + 1.0L) / n0 + 1.0L;
    q = (1.0L / n0 + 1.0L) * (1.0L / n1 + 1.0L);
    n0p1 = (1.0L + 1.0L / n0) / n1;
    n1p1 = (1.0L + 1.0L / n1) / n0;
    one = (1.0L / n0) * (1.0L / n1);
    e0 = ((1.0L + 2.0L * s2) + (1.0L + s2) / n0) / n1;
    e1 = ((1.0L + 2.0L * s2) + (1.0L + s2) / n1) / n0;
  } else if (big1) {
    p = 1.0L + n0 / n1 + 2.0L * n0;
    r = 3.0L * s2 * n0 + 2.0L * s2 + 1.0L + n0;
    q = (1.0L + n0) * (1.0L / n1 + 1.0L);
    n0p1 = (n0 + 1.0L) / n1;
    n1p1 = 1.0L + 1.0L / n1;
    one = 1.0L / n1;
    e0 = (n0 * (1.0L + 2.0L * s2) + 1.0L + s2) / n1;
    e1 = (1.0L + 2.0L * s2) + (1.0L + s2) / n1;
  } else if (big0) {
    p = 1.0L + n1 / n0 + 2.0L * n1;
    r = (3.0L * s2 * n1 + n1) + (2.0L * s2 * n1 + n1) / n0;
    q = (1.0L / n0 + 1.0L) * (1.0L + n1);
    n0p1 = 1.0L + 1.0L / n0;
    n1p1 = (n1 + 1.0L) / n0;
    one = 1.0L / n0;
    e0 = (1.0L + 2.0L * s2) + (1.0L + s2) / n0;
    e1 = (n1 * (1.0L + 2.0L * s2) + 1.0L + s2) / n0;
  } else {
    p = n0 + n1 + 2.0L * n0 * n1;
    r = 3.0L * s2 * n0 * n1 + 2.0L * s2 * n1 + n1 + n0 * n1;
    q = (1.0L + n0) * (1.0L + n1);
    n0p1 = n0 + 1.0L;
    n1p1 = n1 + 1.0L;
    one = 1.0L;
    e0 = n0 * (1.0L + 2.0L * s2) + 1.0L + s2;
    e1 = n1 * (1.0L + 2.0L * s2) + 1.0L + s2;
  }

  const ld d = s2 * p + q;
  Ratios out;
  out.s2 = s2;
  out.s4 = s2 * s2;
  out.p_over_d = p / d;
  out.r_over_d = r / d;
  out.n0p1_over_d = n0p1 / d;
  out.n1p1_over_d = n1p1 / d;
  out.one_over_d = one / d;
  out.e0_over_d = e0 / d;
  out.e1_over_d = e1 / d;
  return out;
}

}  // namespace

double value_L(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const Ratios rr = ratios(db, p);
  return static_cast<double>(rr.s4 * rr.p_over_d);
}

double value_S(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const Ratios rr = ratios(db, p);
  return static_cast<double>(rr.s4 * rr.p_over_d + rr.r_over_d);
}

double value_delta(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const Ratios rr = ratios(db, p);
  return static_cast<double>(rr.r_over_d);
}

ValueGradients grad_values(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const Ratios rr = ratios(db, p);
  ValueGradients g;
  g.vL.dn0 = static_cast<double>(rr.s4 * rr.n1p1_over_d * rr.n1p1_over_d);
  g.vL.dn1 = static_cast<double>(rr.s4 * rr.n0p1_over_d * rr.n0p1_over_d);
  g.vS.dn0 = static_cast<double>(rr.s4 * rr.one_over_d * rr.one_over_d);
  g.vS.dn1 = static_cast<double>(rr.e0_over_d * rr.e0_over_d);
  return g;
}

ValueHessians hessians(const Database& db, const ModelParams& p) {
  db.validate();
  p.validate();
  const Ratios rr = ratios(db, p);
  const ld s6 = rr.s4 * rr.s2;
  ValueHessians h;
  h.vL.dn0n0 = static_cast<double>(-2.0L * rr.s4 * rr.n1p1_over_d * rr.n1p1_over_d * rr.e1_over_d);
  h.vL.dn0n1 = static_cast<double>(-2.0L * s6 * rr.n0p1_over_d * rr.n1p1_over_d * rr.one_over_d);
  h.vL.dn1n1 = static_cast<double>(-2.0L * rr.s4 * rr.n0p1_over_d * rr.n0p1_over_d * rr.e0_over_d);
  h.vS.dn0n0 = static_cast<double>(-2.0L * rr.s4 * rr.e1_over_d * rr.one_over_d * rr.one_over_d);
  h.vS.dn0n1 = static_cast<double>(-2.0L * rr.s4 * rr.e0_over_d * rr.one_over_d * rr.one_over_d);
  h.vS.dn1n1 = static_cast<double>(-2.0L * rr.e0_over_d * rr.e0_over_d * rr.e0_over_d);
  return h;
}

double lambda_star(double n0, const ModelParams& p) {
  p.validate();
  if (!(std::isfinite(n0) && n0 >= 0.0)) throw std::invalid_argument("n0 must be finite and >= 0");
  const ld s2 = p.sigma_mu_sq;
  // (2 n0 + 1) / (n0 + 1) is stable for the whole range of n0.
  const ld t = n0 > kBigN ? (2.0L + 1.0L / static_cast<ld>(n0)) / (1.0L + 1.0L / static_cast<ld>(n0))
                          : (2.0L * static_cast<ld>(n0) + 1.0L) / (static_cast<ld>(n0) + 1.0L);
  const ld root = s2 / (1.0L + s2 * t);
  return static_cast<double>(root * root);
}

double lambda_star_lower_bound(const ModelParams& p) {
  p.validate();
  const ld s2 = p.sigma_mu_sq;
  const ld root = s2 / (1.0L + 2.0L * s2);
  return static_cast<double>(root * root);
}

double lambda_star_upper_bound(const ModelParams& p) {
  p.validate();
  const ld s2 = p.sigma_mu_sq;
  const ld root = s2 / (1.0L + s2);
  return static_cast<double>(root * root);
}

}  // namespace datadump
