#pragma once

#include <span>
#include <string>
#include <vector>

namespace spinlat {

enum class FitModel { poly3, exp_decay, power_law };

const char* to_string(FitModel model);

/// poly3:     y = c0 + c1 x + c2 x^2 + c3 x^3
/// exp_decay: y = c0 exp(-c1 x)     (fitted as a line in log y vs x)
/// power_law: y = c0 x^(-c1)        (fitted as a line in log y vs log x)
///            coefficients are {c0, c1} = {a, exponent}
struct FitResult {
  FitModel model = FitModel::poly3;
  std::vector<double> coefficients;
  /// Root-mean-square residual in the space the fit was performed in (y for
  /// poly3, log y for the scaling models).
  double rms_residual = 0.0;
  int points_used = 0;

  double evaluate(double x) const;
};

/// Least-squares cubic through (x, y); normal equations solved directly.
FitResult fit_poly3(std::span<const double> x, std::span<const double> y);

FitResult fit_exp_decay(std::span<const double> x, std::span<const double> y);
FitResult fit_power_law(std::span<const double> x, std::span<const double> y);

std::string describe(const FitResult& fit);

}  // namespace spinlat
