#include "spinlat/fit.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "spinlat/errors.hpp"

namespace spinlat {

const char* to_string(FitModel model) {
  switch (model) {
    case FitModel::poly3: return "poly3";
    case FitModel::exp_decay: return "exp_decay";
    case FitModel::power_law: return "power_law";
  }
  return "unknown";
}

double FitResult::evaluate(double x) const {
  switch (model) {
    case FitModel::poly3:
      return coefficients[0] + x * (coefficients[1] + x * (coefficients[2] + x * coefficients[3]));
    case FitModel::exp_decay:
      return coefficients[0] * std::exp(-coefficients[1] * x);
    case FitModel::power_law:
      return coefficients[0] * std::pow(x, -coefficients[1]);
  }
  return 0.0;
}

namespace {

// Least squares y ~ sum_j c_j x^j for j < terms via the normal equations.
std::pair<Eigen::VectorXd, double> polynomial_least_squares(std::span<const double> x,
                                                            std::span<const double> y,
                                                            int terms) {
  require(x.size() == y.size(), "fit: x and y differ in length");
  const auto count = static_cast<Eigen::Index>(x.size());
  if (count < terms) {
    fail(ErrorKind::underdetermined_fit, "fit: " + std::to_string(count) +
                                             " points cannot determine " + std::to_string(terms) +
                                             " coefficients");
  }
  Eigen::MatrixXd a(count, terms);
  Eigen::VectorXd rhs(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    double power = 1.0;
    for (int j = 0; j < terms; ++j) {
      a(i, j) = power;
      power *= x[i];
    }
    rhs[i] = y[i];
  }
  const Eigen::MatrixXd normal = a.transpose() * a;
  const Eigen::VectorXd c = normal.fullPivLu().solve(a.transpose() * rhs);
  const Eigen::VectorXd residual = a * c - rhs;
  return {c, std::sqrt(residual.squaredNorm() / static_cast<double>(count))};
}

std::vector<double> logs(std::span<const double> values, const char* what) {
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      fail(ErrorKind::log_domain, std::string("fit: non-positive ") + what + " value " +
                                      std::to_string(values[i]) + " at point " +
                                      std::to_string(i));
    }
    out.push_back(std::log(values[i]));
  }
  return out;
}

}  // namespace

FitResult fit_poly3(std::span<const double> x, std::span<const double> y) {
  auto [c, rms] = polynomial_least_squares(x, y, 4);
  FitResult fit;
  fit.model = FitModel::poly3;
  fit.coefficients.assign(c.data(), c.data() + c.size());
  fit.rms_residual = rms;
  fit.points_used = static_cast<int>(x.size());
  return fit;
}

FitResult fit_exp_decay(std::span<const double> x, std::span<const double> y) {
  const auto log_y = logs(y, "y");
  auto [c, rms] = polynomial_least_squares(x, log_y, 2);
  FitResult fit;
  fit.model = FitModel::exp_decay;
  fit.coefficients = {std::exp(c[0]), -c[1]};
  fit.rms_residual = rms;
  fit.points_used = static_cast<int>(x.size());
  return fit;
}

FitResult fit_power_law(std::span<const double> x, std::span<const double> y) {
  const auto log_x = logs(x, "x");
  const auto log_y = logs(y, "y");
  auto [c, rms] = polynomial_least_squares(log_x, log_y, 2);
  FitResult fit;
  fit.model = FitModel::power_law;
  fit.coefficients = {std::exp(c[0]), -c[1]};
  fit.rms_residual = rms;
  fit.points_used = static_cast<int>(x.size());
  return fit;
}

std::string describe(const FitResult& fit) {
  std::ostringstream os;
  os.precision(12);
  os << "model=" << to_string(fit.model) << " coefficients=";
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    os << (i ? "," : "") << fit.coefficients[i];
  }
  os << " rms_residual=" << fit.rms_residual << " points_used=" << fit.points_used;
  return os.str();
}

}  // namespace spinlat
