#pragma once

// Coefficient maps for the su(1,1) product/exponential identity
//
//   e^{γa²} e^{−βH} e^{γ̄(a†)²} = e^{χa² − ξH + χ̄(a†)²},   H = ½ħω(a†a + aa†).
//
// With x = βħω, κ = e^{−x} and α = sinh(x) − 2κ|γ|², the scalar λ is fixed by
// cosh λ = α + κ and
//
//   ξ = α / (ħω · sinh(λ)/λ),   χ = κγ / (sinh(λ)/λ),   λ² = ξ²(ħω)² − 4|χ|².
//
// λ² may be negative (trigonometric regime); only λ² crosses any interface.

#include "rkbch/types.hpp"

namespace rkbch {

/// Parameters of the ordered product e^{γa²} e^{−βH} e^{γ̄(a†)²}.
struct OscillatorParams {
  double beta = 0.0;
  Complex gamma{};
  double hbar_omega = 1.0;
};

/// Parameters of the single exponential e^{χa² − ξH + χ̄(a†)²}.
struct GibbsParams {
  double xi = 0.0;
  Complex chi{};
  double hbar_omega = 1.0;
};

struct DerivedScalars {
  double kappa = 0.0;
  double alpha = 0.0;
  double lambda_sq = 0.0;
  double sinh_lambda_sq = 0.0;
};

/// Throws DomainError unless hbar_omega > 0 and every field is finite.
void validate(const OscillatorParams& p);
void validate(const GibbsParams& g);

/// κ, α, λ² and sinh²λ for p.
///
/// Throws BranchError when α + κ < −1, or when (α+κ)² − sinh²λ differs from
/// one by more than 1e-9 relative to (α+κ)².
DerivedScalars derived_scalars(const OscillatorParams& p);

/// (β, γ) → (ξ, χ). Throws BranchError, or DegenerateError at λ² = −π².
GibbsParams disentangled_to_gibbs(const OscillatorParams& p);

/// Forward map with a caller-supplied α instead of sinh(βħω) − 2κ|γ|².
/// λ² is taken from cosh λ = α + κ alone.
GibbsParams gibbs_from_alpha(const OscillatorParams& p, double alpha);

/// (ξ, χ) → (β, γ). Throws DomainError when κ = cosh λ − α ≤ 0.
OscillatorParams gibbs_to_disentangled(const GibbsParams& g);

/// ξ > 0 and ξ²(ħω)² > 4|χ|²: the density operator is normalizable.
bool is_physical(const GibbsParams& g);

/// ξ²(ħω)² − 4|χ|².
double lambda_sq(const GibbsParams& g);

}  // namespace rkbch
