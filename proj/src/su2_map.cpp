#include "rkbch/su2_map.hpp"

#include <cmath>

#include "rkbch/errors.hpp"
#include "rkbch/scalar_core.hpp"

namespace rkbch {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Slack on e^β ≥ e^{−λ}.
constexpr double kBoundSlack = 1e-12;

}  // namespace

double su2_lambda_sq(const Su2GibbsParams& g) { return g.xi * g.xi + std::norm(g.chi); }

Su2GibbsParams su2_forward(const Su2DisentangledParams& p) {
  if (!std::isfinite(p.beta) || !finite(p.gamma))
    throw DomainError("beta and gamma must be finite");
  const double eb = std::exp(p.beta);
  const double half_g2 = 0.5 * eb * std::norm(p.gamma);
  const double sh = std::sinh(0.5 * p.beta);
  // cosh λ − 1 = cosh β − 1 + ½e^β|γ|² ≥ 0.
  const double z = lambda_sq_from_cosh_minus_one(2.0 * sh * sh + half_g2);
  const double s = sinhc_sqrt(z);
  if (!(s > 0.0)) throw DegenerateError("sinh(lambda)/lambda underflowed");
  return {(std::sinh(p.beta) - half_g2) / s, p.gamma * eb / s};
}

Su2DisentangledParams su2_inverse(const Su2GibbsParams& g) {
  if (!std::isfinite(g.xi) || !finite(g.chi)) throw DomainError("xi and chi must be finite");
  const double z = su2_lambda_sq(g);
  const double c = cosh_sqrt(z);
  const double s = sinhc_sqrt(z);
  // e^β = c + sξ; for ξ < 0 use (c² − s²ξ²)/(c − sξ) = (1 + s²|χ|²)/(c − sξ).
  const double w = g.xi >= 0.0 ? c + s * g.xi : (1.0 + s * s * std::norm(g.chi)) / (c - s * g.xi);
  const double lower = std::exp(-std::sqrt(z));
  if (!(w > 0.0) || w < lower * (1.0 - kBoundSlack))
    throw DomainError("cosh(lambda) + xi*sinh(lambda)/lambda below exp(-lambda): no real beta");
  return {std::log(w), s * g.chi / w};
}

}  // namespace rkbch
