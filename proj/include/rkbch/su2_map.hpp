#pragma once

// Coefficient maps for the su(2) analogue
//
//   e^{γσ₊} e^{−βσ_z} e^{γ̄σ₋} = exp(χσ₊ − ξσ_z + χ̄σ₋),   σ± = ½(σ_x ± iσ_y),
//
// where λ² = ξ² + |χ|² is never negative.

#include "rkbch/types.hpp"

namespace rkbch {

struct Su2DisentangledParams {
  double beta = 0.0;
  Complex gamma{};
};

struct Su2GibbsParams {
  double xi = 0.0;
  Complex chi{};
};

/// (β, γ) → (ξ, χ), from cosh λ = cosh β + ½e^β|γ|².
Su2GibbsParams su2_forward(const Su2DisentangledParams& p);

/// (ξ, χ) → (β, γ) with e^β = cosh λ + ξ sinh(λ)/λ.
///
/// Throws DomainError if e^β would fall below its lower bound e^{−λ}.
Su2DisentangledParams su2_inverse(const Su2GibbsParams& g);

double su2_lambda_sq(const Su2GibbsParams& g);

}  // namespace rkbch
