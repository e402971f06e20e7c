#include "rkbch/pauli_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "rkbch/errors.hpp"
#include "rkbch/scalar_core.hpp"

namespace rkbch {

namespace {

const Matrix2 kSigmaPlus{{0.0, 1.0, 0.0, 0.0}};
const Matrix2 kSigmaMinus{{0.0, 0.0, 1.0, 0.0}};

Matrix2 diag_exp_sigma3(double t) { return Matrix2::diag(std::exp(t), std::exp(-t)); }

}  // namespace

Matrix2 pauli_product_x(const OscillatorParams& p) {
  validate(p);
  const Matrix2 eye = Matrix2::identity();
  // (σ₁ ∓ iσ₂)² = 0, so each outer exponential is 𝕀 plus its argument.
  const Matrix2 left = eye + (kI * p.gamma) * (kSigma1 - kI * kSigma2);
  const Matrix2 right = eye + (kI * std::conj(p.gamma)) * (kSigma1 + kI * kSigma2);
  return left * diag_exp_sigma3(-p.beta * p.hbar_omega) * right;
}

Matrix2 gibbs_generator_y(const GibbsParams& g) {
  validate(g);
  const Complex chi_bar = std::conj(g.chi);
  return (kI * (g.chi + chi_bar)) * kSigma1 + (g.chi - chi_bar) * kSigma2 +
         Complex(-g.xi * g.hbar_omega) * kSigma3;
}

Matrix2 su2_product(const Su2DisentangledParams& p) {
  const Matrix2 eye = Matrix2::identity();
  return (eye + p.gamma * kSigmaPlus) * diag_exp_sigma3(-p.beta) *
         (eye + std::conj(p.gamma) * kSigmaMinus);
}

Matrix2 su2_generator(const Su2GibbsParams& g) {
  return g.chi * kSigmaPlus + Complex(-g.xi) * kSigma3 + std::conj(g.chi) * kSigmaMinus;
}

Matrix2 expm2_closed(const Matrix2& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (!(std::abs(m.trace()) < 1e-12 * scale))
    throw ShapeError("expm2_closed: matrix is not traceless");
  const Matrix2 sq = m * m;
  const double tol = 1e-10 * scale * scale;
  if (!(std::abs(sq(0, 1)) <= tol && std::abs(sq(1, 0)) <= tol &&
        std::abs(sq(0, 0) - sq(1, 1)) <= tol))
    throw ShapeError("expm2_closed: m^2 is not proportional to the identity");
  const Complex zc = 0.5 * (sq(0, 0) + sq(1, 1));
  if (!(std::abs(zc.imag()) <= tol))
    throw ShapeError("expm2_closed: m^2 = z*I with non-real z");
  const double z = zc.real();
  return Complex(cosh_sqrt(z)) * Matrix2::identity() + Complex(sinhc_sqrt(z)) * m;
}

PauliCoefficients pauli_decompose(const Matrix2& a) {
  // c_k = ½ tr(σ_k a).
  return {0.5 * (a(0, 0) + a(1, 1)), 0.5 * (a(0, 1) + a(1, 0)),
          0.5 * kI * (a(0, 1) - a(1, 0)), 0.5 * (a(0, 0) - a(1, 1))};
}

double verify_su11(const OscillatorParams& p) {
  const GibbsParams g = disentangled_to_gibbs(p);
  return max_abs_diff(pauli_product_x(p), expm2_closed(gibbs_generator_y(g)));
}

double verify_su2(const Su2DisentangledParams& p) {
  const Su2GibbsParams g = su2_forward(p);
  return max_abs_diff(su2_product(p), expm2_closed(su2_generator(g)));
}

}  // namespace rkbch
