#include "frozen_spin.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace sqz::frozen {

namespace {

void require_nonnegative(double kappa, double omega, double j) {
  require(std::isfinite(kappa) && kappa >= 0.0, ErrorCode::invalid_argument, "kappa must be finite and >= 0");
  require(std::isfinite(omega) && omega >= 0.0, ErrorCode::invalid_argument, "omega must be finite and >= 0");
  require(std::isfinite(j) && j >= 0.0, ErrorCode::invalid_argument, "j must be finite and >= 0");
}

}  // namespace

double frequency(double kappa, double omega, double j) {
  require_nonnegative(kappa, omega, j);
  return std::sqrt(omega * omega + 4.0 * kappa * omega * j);
}

FrozenSpinModel::FrozenSpinModel(double kappa, double omega, double j)
    : kappa(kappa), omega(omega), j(j), freq(frequency(kappa, omega, j)) {
  require(omega > 0.0, ErrorCode::domain, "the frozen-spin model requires omega > 0");
}

FrozenVariances predicted_variances(const FrozenSpinModel& m, double t) {
  const double c = std::cos(m.freq * t);
  const double s = std::sin(m.freq * t);
  const double ratio = m.omega / m.freq;  // <= 1
  const double half_j = 0.5 * m.j;
  return {half_j * (c * c + ratio * ratio * s * s),
          half_j * (c * c + s * s / (ratio * ratio))};
}

double predicted_xi_min(const FrozenSpinModel& m) { return m.omega / m.freq; }

double optimal_time(const FrozenSpinModel& m, int n) {
  require(n >= 0, ErrorCode::invalid_argument, "n must be >= 0");
  return (2.0 * n + 1.0) * std::numbers::pi / (2.0 * m.freq);
}

double asymptotic_xi(double kappa, double omega, double j) {
  require_nonnegative(kappa, omega, j);
  require(omega > 0.0 && kappa * j > 0.0, ErrorCode::domain,
          "the asymptotic form requires omega > 0 and kappa J > 0");
  return 1.0 / std::sqrt(4.0 * kappa * j / omega);
}

}  // namespace sqz::frozen
