#include "rkbch/su11_map.hpp"

#include <algorithm>
#include <cmath>

#include "rkbch/errors.hpp"
#include "rkbch/scalar_core.hpp"

namespace rkbch {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_hbar_omega(double hbar_omega) {
  if (!(hbar_omega > 0.0) || !std::isfinite(hbar_omega))
    throw DomainError("hbar_omega must be positive and finite");
}

// Relative tolerance on (α+κ)² − sinh²λ = 1.
constexpr double kConsistencyTolerance = 1e-9;

// sin(π)/π evaluates to ~4e-17 rather than zero.
constexpr double kDegenerateSinhc = 1e-15;

GibbsParams gibbs_from_scalars(const OscillatorParams& p, double kappa, double alpha,
                               double lambda_sq) {
  const double s = sinhc_sqrt(lambda_sq);
  if (std::abs(s) < kDegenerateSinhc)
    throw DegenerateError("sinh(lambda)/lambda vanishes (lambda = i*pi)");
  return {alpha / (p.hbar_omega * s), kappa * p.gamma / s, p.hbar_omega};
}

}  // namespace

void validate(const OscillatorParams& p) {
  check_hbar_omega(p.hbar_omega);
  if (!std::isfinite(p.beta) || !finite(p.gamma))
    throw DomainError("beta and gamma must be finite");
}

void validate(const GibbsParams& g) {
  check_hbar_omega(g.hbar_omega);
  if (!std::isfinite(g.xi) || !finite(g.chi)) throw DomainError("xi and chi must be finite");
}

DerivedScalars derived_scalars(const OscillatorParams& p) {
  validate(p);
  const double x = p.beta * p.hbar_omega;
  const double g2 = std::norm(p.gamma);

  DerivedScalars d;
  d.kappa = std::exp(-x);
  d.alpha = std::sinh(x) - 2.0 * d.kappa * g2;
  d.sinh_lambda_sq = d.alpha * d.alpha - 4.0 * d.kappa * d.kappa * g2;

  // α + κ − 1 = cosh(x) − 1 − 2κ|γ|², written without cancellation at small x.
  const double sh = std::sinh(0.5 * x);
  const double cosh_minus_one = 2.0 * sh * sh - 2.0 * d.kappa * g2;
  d.lambda_sq = lambda_sq_from_cosh_minus_one(cosh_minus_one);

  const double c = d.alpha + d.kappa;
  const double defect = c * c - d.sinh_lambda_sq - 1.0;
  if (!(std::abs(defect) <= kConsistencyTolerance * std::max(1.0, c * c)))
    throw BranchError("(alpha + kappa)^2 - sinh^2(lambda) != 1: inconsistent scalars");
  return d;
}

GibbsParams disentangled_to_gibbs(const OscillatorParams& p) {
  const DerivedScalars d = derived_scalars(p);
  return gibbs_from_scalars(p, d.kappa, d.alpha, d.lambda_sq);
}

GibbsParams gibbs_from_alpha(const OscillatorParams& p, double alpha) {
  validate(p);
  const double kappa = std::exp(-p.beta * p.hbar_omega);
  return gibbs_from_scalars(p, kappa, alpha,
                            lambda_sq_from_cosh_minus_one(alpha + kappa - 1.0));
}

double lambda_sq(const GibbsParams& g) {
  const double e = g.xi * g.hbar_omega;
  return e * e - 4.0 * std::norm(g.chi);
}

OscillatorParams gibbs_to_disentangled(const GibbsParams& g) {
  validate(g);
  const double z = lambda_sq(g);
  const double c = cosh_sqrt(z);
  const double s = sinhc_sqrt(z);
  if (std::abs(s) < kDegenerateSinhc)
    throw DegenerateError("sinh(lambda)/lambda vanishes (lambda = i*pi)");
  const double alpha = g.hbar_omega * g.xi * s;

  // κ = c − α; when both are positive use (c² − α²)/(c + α) with
  // c² − α² = 1 − 4|χ|²s², which avoids cancelling two large numbers.
  double kappa;
  if (alpha > 0.0 && c > 0.0)
    kappa = (1.0 - 4.0 * std::norm(g.chi) * s * s) / (c + alpha);
  else
    kappa = c - alpha;
  if (!(kappa > 0.0))
    throw DomainError("kappa = cosh(lambda) - alpha <= 0: no real beta exists");

  return {-std::log(kappa) / g.hbar_omega, s * g.chi / kappa, g.hbar_omega};
}

bool is_physical(const GibbsParams& g) { return g.xi > 0.0 && lambda_sq(g) > 0.0; }

}  // namespace rkbch
