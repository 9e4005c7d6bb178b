#include "datadump/posterior.hpp"

#include <array>
#include <cmath>

#include "datadump/rng.hpp"

namespace datadump {

void McConfig::validate() const {
  if (draws < 1) throw std::invalid_argument("draws must be >= 1");
}

double conditional_value_via_covariance(TargetKind target, const Database& db,
                                        const ModelParams& p) {
  db.validate();
  p.validate();
  const double s2 = p.sigma_mu_sq;
  const double shift = target == TargetKind::Nowcaster ? 1.0 : 0.0;

  const bool has0 = db.n0 > 0.0;
  const bool has1 = db.n1 > 0.0;
  if (!has0 && !has1) return 0.0;

  // cov(target, ybar_t) and var(ybar_t); cov(ybar0, ybar1) = s2.
  const double b0 = s2;
  const double b1 = s2 + shift;
  const double a00 = s2 + 1.0 + 1.0 / db.n0;
  const double a11 = s2 + 1.0 + 1.0 / db.n1;
  const double a01 = s2;

  if (has0 && has1) {
    const double det = a00 * a11 - a01 * a01;
    if (!(det > 1e-300 * std::max(1.0, a00 * a11)))
      throw SolveError("degenerate signal covariance matrix");
    return (b0 * b0 * a11 - 2.0 * b0 * b1 * a01 + b1 * b1 * a00) / det;
  }
  if (has1) return b1 * b1 / a11;
  return b0 * b0 / a00;
}

namespace {

constexpr std::uint64_t kChunk = 8192;
constexpr std::uint64_t kSlotsPerDraw = 6;  // three Box-Muller pairs

struct DrawVars {
  double target;
  double y0;
  double y1;
};

struct Simulator {
  double sigma_mu;
  double shift;
  double inv_sqrt_n0;
  double inv_sqrt_n1;
  bool has0;
  bool has1;
  std::uint64_t seed;

  DrawVars operator()(std::uint64_t draw) const {
    const std::uint64_t base = draw * kSlotsPerDraw;
    const auto [z0, z1] = rng::normal_pair(seed, base);
    const auto [z2, z3] = rng::normal_pair(seed, base + 2);
    const auto [z4, z5] = rng::normal_pair(seed, base + 4);
    (void)z5;
    const double mu = sigma_mu * z0;
    const double x0 = z1;
    const double x1 = z2;
    DrawVars v;
    v.target = mu + shift * x1;
    v.y0 = has0 ? mu + x0 + z3 * inv_sqrt_n0 : 0.0;
    v.y1 = has1 ? mu + x1 + z4 * inv_sqrt_n1 : 0.0;
    return v;
  }
};

struct MomentAcc {
  // order: t, y0, y1, tt, ty0, ty1, y00, y01, y11
  std::array<double, 9> s{};
};

struct LossAcc {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

McEstimate monte_carlo_value(TargetKind target, const Database& db, const ModelParams& p,
                             const McConfig& cfg) {
  db.validate();
  p.validate();
  cfg.validate();

  const bool has0 = db.n0 > 0.0;
  const bool has1 = db.n1 > 0.0;
  if (!has0 && !has1) return {0.0, 0.0};  // no data, no variance reduction

  Simulator sim;
  sim.sigma_mu = std::sqrt(p.sigma_mu_sq);
  sim.shift = target == TargetKind::Nowcaster ? 1.0 : 0.0;
  sim.inv_sqrt_n0 = has0 ? 1.0 / std::sqrt(db.n0) : 0.0;
  sim.inv_sqrt_n1 = has1 ? 1.0 / std::sqrt(db.n1) : 0.0;
  sim.has0 = has0;
  sim.has1 = has1;
  sim.seed = cfg.seed;

  const double n = static_cast<double>(cfg.draws);

  // Pass 1: raw moments of (target, signals) across all draws.
  const MomentAcc m = exec::chunked_reduce<MomentAcc>(
      cfg.draws, kChunk, cfg.mode, MomentAcc{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        MomentAcc acc;
        for (std::uint64_t d = lo; d < hi; ++d) {
          const DrawVars v = sim(d);
          acc.s[0] += v.target;
          acc.s[1] += v.y0;
          acc.s[2] += v.y1;
          acc.s[3] += v.target * v.target;
          acc.s[4] += v.target * v.y0;
          acc.s[5] += v.target * v.y1;
          acc.s[6] += v.y0 * v.y0;
          acc.s[7] += v.y0 * v.y1;
          acc.s[8] += v.y1 * v.y1;
        }
        return acc;
      },
      [](MomentAcc a, const MomentAcc& b) {
        for (std::size_t i = 0; i < a.s.size(); ++i) a.s[i] += b.s[i];
        return a;
      });

  const double mt = m.s[0] / n;
  const double m0 = m.s[1] / n;
  const double m1 = m.s[2] / n;
  const double denom = cfg.draws > 1 ? n - 1.0 : 1.0;
  const double c_t0 = (m.s[4] - n * mt * m0) / denom;
  const double c_t1 = (m.s[5] - n * mt * m1) / denom;
  const double c_00 = (m.s[6] - n * m0 * m0) / denom;
  const double c_01 = (m.s[7] - n * m0 * m1) / denom;
  const double c_11 = (m.s[8] - n * m1 * m1) / denom;

  // Conditioning weights from the empirical covariance.
  double w0 = 0.0, w1 = 0.0;
  if (has0 && has1) {
    const double det = c_00 * c_11 - c_01 * c_01;
    if (!(std::fabs(det) > 1e-300)) throw SolveError("degenerate empirical covariance");
    w0 = (c_t0 * c_11 - c_t1 * c_01) / det;
    w1 = (c_t1 * c_00 - c_t0 * c_01) / det;
  } else if (has1) {
    w1 = c_t1 / c_11;
  } else {
    w0 = c_t0 / c_00;
  }

  // Pass 2: squared-error reduction of the empirical Bayes action vs the
  // prior action a = 0, draw by draw.
  const LossAcc loss = exec::chunked_reduce<LossAcc>(
      cfg.draws, kChunk, cfg.mode, LossAcc{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        LossAcc acc;
        for (std::uint64_t d = lo; d < hi; ++d) {
          const DrawVars v = sim(d);
          const double action = mt + w0 * (v.y0 - m0) + w1 * (v.y1 - m1);
          const double err = v.target - action;
          const double gain = v.target * v.target - err * err;
          acc.sum += gain;
          acc.sum_sq += gain * gain;
        }
        return acc;
      },
      [](LossAcc a, const LossAcc& b) {
        a.sum += b.sum;
        a.sum_sq += b.sum_sq;
        return a;
      });

  McEstimate out;
  out.estimate = loss.sum / n;
  if (cfg.draws > 1) {
    const double var = (loss.sum_sq - n * out.estimate * out.estimate) / (n - 1.0);
    out.std_error = std::sqrt(std::max(0.0, var) / n);
  }
  return out;
}

}  // namespace datadump
