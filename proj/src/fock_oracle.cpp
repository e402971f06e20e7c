#include "rkbch/fock_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rkbch/errors.hpp"
#include "rkbch/expm.hpp"

namespace rkbch {

FockSystem::FockSystem(std::size_t dim, double hbar_omega)
    : dim_(dim), hbar_omega_(hbar_omega), a_(dim), adag_(dim), h_(dim) {
  if (dim < 2) throw SizeError("Fock dimension must be at least 2, got " + std::to_string(dim));
  if (!(hbar_omega > 0.0) || !std::isfinite(hbar_omega))
    throw DomainError("hbar_omega must be positive and finite");
  for (std::size_t n = 1; n < dim; ++n) {
    const double r = std::sqrt(static_cast<double>(n));
    a_(n - 1, n) = r;
    adag_(n, n - 1) = r;
  }
  for (std::size_t n = 0; n < dim; ++n) h_(n, n) = energy(n);
}

double FockSystem::energy(std::size_t n) const {
  return hbar_omega_ * (static_cast<double>(n) + 0.5);
}

FockSystem build_fock(std::size_t dim, double hbar_omega) { return {dim, hbar_omega}; }

std::array<ComplexMatrix, 3> su11_generators(const FockSystem& f) {
  const auto& a = f.annihilation();
  const auto& ad = f.creation();
  const ComplexMatrix a2 = multiply(a, a);
  const ComplexMatrix ad2 = multiply(ad, ad);
  return {0.25 * (ad2 + a2), Complex(0.0, 0.25) * (ad2 - a2),
          0.25 * (multiply(ad, a) + multiply(a, ad))};
}

ComplexMatrix squeeze_factor(const FockSystem& f, Complex gamma) {
  const std::size_t n = f.dim();
  ComplexMatrix u(n);
  // U(i, i+2k) = γ^k / k! · √((i+1)(i+2)…(i+2k)), the k-th term of Σ (γa²)^k / k!.
  for (std::size_t i = 0; i < n; ++i) {
    Complex term = 1.0;
    u(i, i) = term;
    for (std::size_t k = 0; i + 2 * k + 2 < n; ++k) {
      const double m = static_cast<double>(i + 2 * k);
      term *= gamma / static_cast<double>(k + 1) * std::sqrt((m + 1.0) * (m + 2.0));
      u(i, i + 2 * k + 2) = term;
    }
  }
  return u;
}

ComplexMatrix product_form(const FockSystem& f, const OscillatorParams& p, Backend backend) {
  validate(p);
  if (p.hbar_omega != f.hbar_omega())
    throw DomainError("product_form: hbar_omega differs from the Fock system");
  const ComplexMatrix u = squeeze_factor(f, p.gamma);
  ComplexMatrix ud = u;
  const std::size_t n = f.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const double w = std::exp(-p.beta * f.energy(k));
    for (std::size_t i = 0; i < n; ++i) ud(i, k) *= w;
  }
  // e^{γ̄(a†)²} = (e^{γa²})†.
  return multiply(ud, u.adjoint(), backend);
}

ComplexMatrix gibbs_generator(const FockSystem& f, const GibbsParams& g) {
  validate(g);
  if (g.hbar_omega != f.hbar_omega())
    throw DomainError("gibbs_form: hbar_omega differs from the Fock system");
  const std::size_t n = f.dim();
  ComplexMatrix gen(n);
  for (std::size_t i = 0; i < n; ++i) gen(i, i) = -g.xi * f.energy(i);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const double m = static_cast<double>(i);
    const double r = std::sqrt((m + 1.0) * (m + 2.0));
    gen(i, i + 2) = g.chi * r;
    gen(i + 2, i) = std::conj(g.chi) * r;
  }
  return gen;
}

ComplexMatrix gibbs_form(const FockSystem& f, const GibbsParams& g, Backend backend) {
  return expm_dense(gibbs_generator(f, g), kDefaultTaylorOrder, kDefaultMaxSquarings, backend);
}

double fock_block_residual(const FockSystem& f, const OscillatorParams& p, std::size_t block,
                           Backend backend) {
  block = std::min(block, f.dim());
  const ComplexMatrix prod = product_form(f, p, backend).top_left(block);
  const ComplexMatrix gibbs = gibbs_form(f, disentangled_to_gibbs(p), backend).top_left(block);
  return max_abs_diff(gibbs, prod) / max_abs(prod);
}

namespace {

struct Normalized {
  ComplexMatrix rho;
  double z;
};

Normalized normalize(ComplexMatrix prod) {
  const double z = prod.trace().real();
  prod *= 1.0 / z;
  return {std::move(prod), z};
}

double block_drift(const ComplexMatrix& rho_n, const ComplexMatrix& rho_2n, std::size_t block) {
  const ComplexMatrix a = rho_n.top_left(block);
  const ComplexMatrix b = rho_2n.top_left(block);
  const double d = max_abs_diff(a, b) / max_abs(b);
  return std::isfinite(d) ? d : HUGE_VAL;
}

void check_block(const FockSystem& f, std::size_t block) {
  if (block == 0 || block > f.dim() / 4)
    throw SizeError("truncation block must be in [1, dim/4], got " + std::to_string(block));
}

}  // namespace

double truncation_check(const FockSystem& f, const OscillatorParams& p, std::size_t block,
                        Backend backend) {
  check_block(f, block);
  const FockSystem doubled(2 * f.dim(), f.hbar_omega());
  const Normalized n1 = normalize(product_form(f, p, backend));
  const Normalized n2 = normalize(product_form(doubled, p, backend));
  return block_drift(n1.rho, n2.rho, block);
}

DensityResult density(const FockSystem& f, const OscillatorParams& p, double tolerance,
                      std::size_t block, Backend backend) {
  if (!is_physical(disentangled_to_gibbs(p)))
    throw DivergenceError("unphysical: trace diverges");
  block = std::min(block, f.dim() / 4);
  check_block(f, block);

  const FockSystem doubled(2 * f.dim(), f.hbar_omega());
  Normalized n1 = normalize(product_form(f, p, backend));
  const Normalized n2 = normalize(product_form(doubled, p, backend));

  DensityResult r;
  r.drift = block_drift(n1.rho, n2.rho, block);
  if (!(r.drift <= tolerance))
    throw DivergenceError("truncation drift " + std::to_string(r.drift) + " exceeds tolerance");

  r.z = n1.z;
  r.rho = std::move(n1.rho);
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    r.mean_h += r.rho(i, i).real() * f.energy(i);
    for (std::size_t j = 0; j < n; ++j) r.purity += (r.rho(i, j) * r.rho(j, i)).real();
  }
  return r;
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      h(i, j) = 0.5 * (m(ui, uj) + std::conj(m(uj, ui)));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace rkbch
