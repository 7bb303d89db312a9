#pragma once

namespace sqz::frozen {

// Oscillation frequency sqrt(omega^2 + 4 kappa omega J) of the linearized
// dynamics around <Jx> = -J.
double frequency(double kappa, double omega, double j);

// Closed-form model of the variance dynamics, valid for omega >> kappa.
// omega = 0 is outside its domain: the Jy variance divides by omega^2.
struct FrozenSpinModel {
  double kappa;
  double omega;
  double j;
  double freq;

  FrozenSpinModel(double kappa, double omega, double j);
};

struct FrozenVariances {
  double var_jz;
  double var_jy;
};

// var_jz = (J/2)(cos^2 wt + (omega/w)^2 sin^2 wt)
// var_jy = (J/2)(cos^2 wt + (w/omega)^2 sin^2 wt)
FrozenVariances predicted_variances(const FrozenSpinModel& m, double t);

// omega / freq, the squeezing parameter at the optimal times.
double predicted_xi_min(const FrozenSpinModel& m);

// (2n+1) pi / (2 freq), the times of strongest predicted squeezing.
double optimal_time(const FrozenSpinModel& m, int n);

// (4 kappa J / omega)^{-1/2}, the kappa J >> omega limit of predicted_xi_min.
double asymptotic_xi(double kappa, double omega, double j);

}  // namespace sqz::frozen
