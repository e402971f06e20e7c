#pragma once

// Both identities checked in the defining 2×2 representation, where the
// su(1,1) generators map to Pauli matrices through σ_α = 2T_α with
// T₁ = −iS₁, T₂ = iS₂, T₃ = S₃.

#include "rkbch/matrix.hpp"
#include "rkbch/su11_map.hpp"
#include "rkbch/su2_map.hpp"

namespace rkbch {

/// e^{iγ(σ₁−iσ₂)} e^{−βħωσ₃} e^{iγ̄(σ₁+iσ₂)} from its exactly truncating factors.
Matrix2 pauli_product_x(const OscillatorParams& p);

/// Y = i(χ+χ̄)σ₁ + (χ−χ̄)σ₂ − ξħωσ₃.
Matrix2 gibbs_generator_y(const GibbsParams& g);

/// (𝕀 + γσ₊) e^{−βσ₃} (𝕀 + γ̄σ₋).
Matrix2 su2_product(const Su2DisentangledParams& p);

/// χσ₊ − ξσ₃ + χ̄σ₋.
Matrix2 su2_generator(const Su2GibbsParams& g);

/// Closed-form exponential of a traceless 2×2 matrix with m² = z𝕀, z real:
/// cosh_sqrt(z)𝕀 + sinhc_sqrt(z)m. Throws ShapeError otherwise.
Matrix2 expm2_closed(const Matrix2& m);

/// Coefficients of a = c₀𝕀 + c₁σ₁ + c₂σ₂ + c₃σ₃.
struct PauliCoefficients {
  Complex c0, c1, c2, c3;
};
PauliCoefficients pauli_decompose(const Matrix2& a);

/// max|X − exp(Y)| with (ξ, χ) from disentangled_to_gibbs(p).
double verify_su11(const OscillatorParams& p);
double verify_su2(const Su2DisentangledParams& p);

}  // namespace rkbch
