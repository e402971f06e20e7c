#pragma once

// Even entire functions of λ evaluated through z = λ².
//
//   cosh_sqrt(z)  = cosh(√z)      (z ≥ 0),  cos(√−z)       (z < 0)
//   sinhc_sqrt(z) = sinh(√z)/√z   (z > 0),  sin(√−z)/√−z   (z < 0),  1 at z = 0
//
// Callers never take √z themselves; the sign of z selects the regime.

namespace rkbch {

/// Below this |z| the Taylor series is used instead of the closed form.
inline constexpr double kSeriesThreshold = 0.25;
inline constexpr int kSeriesTerms = 10;

double cosh_sqrt(double z);
double sinhc_sqrt(double z);

namespace detail {
double cosh_sqrt_series(double z, int terms = kSeriesTerms);
double sinhc_sqrt_series(double z, int terms = kSeriesTerms);
double cosh_sqrt_closed(double z);
double sinhc_sqrt_closed(double z);
}  // namespace detail

/// Inverse of cosh_sqrt on its principal monotone branches, taking
/// t = cosh(λ) − 1 so that λ² stays accurate near zero.
///
/// t ≥ 0 gives arccosh(1 + t)², −2 ≤ t < 0 gives −arccos(1 + t)².
/// Throws BranchError for t < −2 or non-finite t.
double lambda_sq_from_cosh_minus_one(double t);

}  // namespace rkbch
