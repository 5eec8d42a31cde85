#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "hammock/dataset.hpp"
#include "hammock/error.hpp"

namespace hammock {

PowerLawFit fit_power_law(std::span<const double> values,
                          PowerLawOptions options) {
  const auto n = static_cast<Eigen::Index>(values.size());
  const Eigen::Index columns = options.cutoff ? 3 : 2;
  if (n < 3) {
    throw DomainError("power-law fit needs at least 3 ranks");
  }

  Eigen::MatrixXd design(n, columns);
  Eigen::VectorXd target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("power-law fit needs strictly positive counts (rank " +
                        std::to_string(i + 1) + ")");
    }
    const double rank = static_cast<double>(i + 1);
    design(i, 0) = 1.0;
    design(i, 1) = std::log(rank);
    if (options.cutoff) design(i, 2) = rank;
    target(i) = std::log(v);
  }

  Eigen::VectorXd coef = design.colPivHouseholderQr().solve(target);
  PowerLawFit fit;
  fit.intercept = coef(0);
  fit.alpha = -coef(1);
  fit.cutoff_coefficient = options.cutoff ? coef(2) : 0.0;
  fit.tau = fit.cutoff_coefficient < 0.0
                ? -1.0 / fit.cutoff_coefficient
                : std::numeric_limits<double>::infinity();
  fit.residual = (design * coef - target).squaredNorm();
  return fit;
}

PowerLawFit fit_power_law(std::span<const std::size_t> counts,
                          PowerLawOptions options) {
  std::vector<double> values(counts.begin(), counts.end());
  return fit_power_law(std::span<const double>(values), options);
}

}  // namespace hammock
