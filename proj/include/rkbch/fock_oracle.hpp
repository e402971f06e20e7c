#pragma once

// The identity in a truncated Fock space, plus observables of the density
// operator ρ = e^{γa²} e^{−βH} e^{γ̄(a†)²} / Z.
//
// Truncation only affects rows and columns near the cut, so comparisons are
// made on a leading block and convergence is judged by doubling the dimension.

#include <array>
#include <cstddef>

#include "rkbch/kernels.hpp"
#include "rkbch/matrix.hpp"
#include "rkbch/su11_map.hpp"

namespace rkbch {

inline constexpr std::size_t kDefaultFockDim = 64;
inline constexpr std::size_t kDefaultBlock = 8;
inline constexpr double kDefaultDriftTolerance = 1e-8;

/// Ladder operators and Hamiltonian on span{|0⟩, …, |N−1⟩}.
/// a|n⟩ = √n|n−1⟩, so a carries √1…√(N−1) on its superdiagonal.
class FockSystem {
 public:
  /// Throws SizeError for dim < 2 and DomainError for hbar_omega ≤ 0.
  FockSystem(std::size_t dim, double hbar_omega);

  std::size_t dim() const { return dim_; }
  double hbar_omega() const { return hbar_omega_; }

  const ComplexMatrix& annihilation() const { return a_; }
  const ComplexMatrix& creation() const { return adag_; }
  const ComplexMatrix& hamiltonian() const { return h_; }
  /// ħω(n + ½).
  double energy(std::size_t n) const;

 private:
  std::size_t dim_;
  double hbar_omega_;
  ComplexMatrix a_;
  ComplexMatrix adag_;
  ComplexMatrix h_;
};

FockSystem build_fock(std::size_t dim, double hbar_omega = 1.0);

/// S₁ = ¼((a†)² + a²), S₂ = (i/4)((a†)² − a²), S₃ = ¼(a†a + aa†).
std::array<ComplexMatrix, 3> su11_generators(const FockSystem& f);

/// e^{γa²} by its terminating series; upper triangular with step-2 bands.
ComplexMatrix squeeze_factor(const FockSystem& f, Complex gamma);

/// e^{γa²} e^{−βH} e^{γ̄(a†)²} at the truncation of f.
ComplexMatrix product_form(const FockSystem& f, const OscillatorParams& p,
                           Backend backend = Backend::kAuto);

/// χa² − ξH + χ̄(a†)².
ComplexMatrix gibbs_generator(const FockSystem& f, const GibbsParams& g);

/// expm_dense of gibbs_generator. Throws ConvergenceError for extreme parameters.
ComplexMatrix gibbs_form(const FockSystem& f, const GibbsParams& g,
                         Backend backend = Backend::kAuto);

/// max|G − P| / max|P| over the leading block, with P = product_form(p) and
/// G = gibbs_form(disentangled_to_gibbs(p)).
double fock_block_residual(const FockSystem& f, const OscillatorParams& p,
                           std::size_t block = kDefaultBlock, Backend backend = Backend::kAuto);

/// Drift of the leading block of ρ between dimensions N and 2N, measured as
/// max|ρ_N − ρ_2N| / max|ρ_2N|. Throws SizeError unless block ≤ N/4.
double truncation_check(const FockSystem& f, const OscillatorParams& p,
                        std::size_t block = kDefaultBlock, Backend backend = Backend::kAuto);

struct DensityResult {
  ComplexMatrix rho;
  double z = 0.0;
  double mean_h = 0.0;
  double purity = 0.0;
  double drift = 0.0;
};

/// Normalized density operator with Z, ⟨H⟩ and tr ρ².
///
/// Throws DivergenceError when the parameters are unphysical or the
/// truncation drift exceeds tolerance.
DensityResult density(const FockSystem& f, const OscillatorParams& p,
                      double tolerance = kDefaultDriftTolerance,
                      std::size_t block = kDefaultBlock, Backend backend = Backend::kAuto);

/// Smallest eigenvalue of (m + m†)/2.
double min_hermitian_eigenvalue(const ComplexMatrix& m);

}  // namespace rkbch
