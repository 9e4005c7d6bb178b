#include "datadump/types.hpp"

#include <cmath>

namespace datadump {

void ModelParams::validate() const {
  if (!(std::isfinite(sigma_mu_sq) && sigma_mu_sq > 0.0))
    throw std::invalid_argument("sigma_mu_sq must be finite and > 0");
  if (!(std::isfinite(cost) && cost > 0.0))
    throw std::invalid_argument("cost must be finite and > 0");
  if (!(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must lie in [0, 1]");
}

void Database::validate() const {
  if (!(std::isfinite(n0) && n0 >= 0.0))
    throw std::invalid_argument("n0 must be finite and >= 0");
  if (!(std::isfinite(n1) && n1 >= 0.0))
    throw std::invalid_argument("n1 must be finite and >= 0");
}

double normalized_sample_size(double raw_n, double sigma_eps_sq) {
  if (!(std::isfinite(sigma_eps_sq) && sigma_eps_sq > 0.0))
    throw std::invalid_argument("sigma_eps_sq must be finite and > 0");
  if (!(std::isfinite(raw_n) && raw_n >= 0.0))
    throw std::invalid_argument("raw_n must be finite and >= 0");
  return raw_n / sigma_eps_sq;
}

}  // namespace datadump
