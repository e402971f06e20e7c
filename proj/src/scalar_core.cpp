#include "rkbch/scalar_core.hpp"

#include <cmath>
#include <numbers>

#include "rkbch/errors.hpp"

namespace rkbch {

namespace detail {

// Horner in z over the coefficients 1/(2k + offset)!.
static double even_series(double z, int terms, int offset) {
  double acc = 1.0;
  for (int k = terms - 1; k >= 1; --k) {
    const double n = 2.0 * k + offset;
    acc = 1.0 + z * acc / (n * (n - 1.0));
  }
  return acc;
}

double cosh_sqrt_series(double z, int terms) { return even_series(z, terms, 0); }

double sinhc_sqrt_series(double z, int terms) { return even_series(z, terms, 1); }

double cosh_sqrt_closed(double z) {
  if (z >= 0.0) return std::cosh(std::sqrt(z));
  return std::cos(std::sqrt(-z));
}

double sinhc_sqrt_closed(double z) {
  if (z == 0.0) return 1.0;
  if (z > 0.0) {
    const double x = std::sqrt(z);
    return std::sinh(x) / x;
  }
  const double x = std::sqrt(-z);
  return std::sin(x) / x;
}

}  // namespace detail

double cosh_sqrt(double z) {
  if (std::abs(z) < kSeriesThreshold) return detail::cosh_sqrt_series(z);
  return detail::cosh_sqrt_closed(z);
}

double sinhc_sqrt(double z) {
  if (std::abs(z) < kSeriesThreshold) return detail::sinhc_sqrt_series(z);
  return detail::sinhc_sqrt_closed(z);
}

double lambda_sq_from_cosh_minus_one(double t) {
  if (!std::isfinite(t)) throw BranchError("cosh(lambda) is not finite");
  if (t >= 0.0) {
    // arccosh(1 + t) = log1p(t + sqrt(t(t + 2))), which keeps small t exact.
    const double lambda = t < 1e150 ? std::log1p(t + std::sqrt(t * (t + 2.0)))
                                    : std::log(2.0) + std::log1p(t);
    return lambda * lambda;
  }
  if (t < -2.0) {
    throw BranchError("cosh(lambda) = alpha + kappa < -1: outside the principal branch");
  }
  // 1 − c² = (−t)(2 + t) avoids cancellation at both ends of (−1, 1).
  const double theta = std::atan2(std::sqrt(-t * (2.0 + t)), 1.0 + t);
  return -theta * theta;
}

}  // namespace rkbch
