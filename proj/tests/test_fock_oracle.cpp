#include <doctest.h>

#include <cmath>

#include "grids.hpp"
#include "oracles.hpp"
#include "rkbch/errors.hpp"
#include "rkbch/expm.hpp"
#include "rkbch/fock_oracle.hpp"

using namespace rkbch;

namespace {

double commutator_defect(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& want,
                         std::size_t block) {
  const ComplexMatrix c = multiply(x, y) - multiply(y, x);
  return max_abs_diff(c.top_left(block), want.top_left(block));
}

}  // namespace

TEST_CASE("build_fock examples") {
  const FockSystem f2 = build_fock(2, 1.0);
  CHECK(f2.annihilation()(0, 1) == Complex(1.0));
  CHECK(f2.annihilation()(1, 0) == Complex{});
  CHECK(f2.annihilation()(0, 0) == Complex{});
  CHECK(f2.hamiltonian()(0, 0) == Complex(0.5));
  CHECK(f2.hamiltonian()(1, 1) == Complex(1.5));

  const FockSystem f3 = build_fock(3, 1.0);
  CHECK(f3.annihilation()(0, 1) == Complex(1.0));
  CHECK(f3.annihilation()(1, 2) == Complex(std::sqrt(2.0)));
  CHECK(f3.hamiltonian()(2, 2) == Complex(2.5));

  const FockSystem w = build_fock(3, 2.0);
  CHECK(w.hamiltonian()(0, 0) == Complex(1.0));
  CHECK(w.hamiltonian()(1, 1) == Complex(3.0));
  CHECK(w.hamiltonian()(2, 2) == Complex(5.0));

  CHECK_THROWS_AS(build_fock(1, 1.0), SizeError);
  CHECK_THROWS_AS(build_fock(0, 1.0), SizeError);
  CHECK_THROWS_AS(build_fock(4, -1.0), DomainError);
}

TEST_CASE("ladder structure is bit-exact") {
  const FockSystem f = build_fock(40, 1.0);
  const auto& a = f.annihilation();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) {
      const Complex want = j == i + 1 ? Complex(std::sqrt(static_cast<double>(j))) : Complex{};
      CHECK(a(i, j) == want);
      CHECK(f.creation()(j, i) == want);
    }
  // [a, a†] = 𝕀 away from the cut.
  const ComplexMatrix c = multiply(a, f.creation()) - multiply(f.creation(), a);
  CHECK(max_abs_diff(c.top_left(f.dim() - 1), ComplexMatrix::identity(f.dim() - 1)) < 1e-13);
}

TEST_CASE("su(1,1) commutation relations on the interior block") {
  const FockSystem f = build_fock(30, 1.0);
  const auto [s1, s2, s3] = su11_generators(f);
  const std::size_t b = f.dim() - 2;
  CHECK(commutator_defect(s1, s2, kI * s3, b) <= 1e-12);
  CHECK(commutator_defect(s2, s3, -kI * s1, b) <= 1e-12);
  CHECK(commutator_defect(s3, s1, -kI * s2, b) <= 1e-12);
}

TEST_CASE("squeeze_factor equals the dense exponential of gamma a^2") {
  const FockSystem f = build_fock(24, 1.0);
  const Complex gamma(0.3, -0.2);
  ComplexMatrix gen = multiply(f.annihilation(), f.annihilation());
  gen *= gamma;
  const ComplexMatrix dense = expm_dense(gen);
  const ComplexMatrix series = squeeze_factor(f, gamma);
  CHECK(max_abs_diff(dense, series) <= 1e-12 * max_abs(series));
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(series(i, j) == Complex{});
}

TEST_CASE("product_form examples") {
  const FockSystem f = build_fock(16, 1.0);
  SUBCASE("gamma = 0 is the thermal diagonal") {
    const ComplexMatrix p = product_form(f, {1.3, 0.0, 1.0});
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j) {
        const double want = i == j ? std::exp(-1.3 * (i + 0.5)) : 0.0;
        CHECK(std::abs(p(i, j) - want) <= 1e-16);
      }
  }
  SUBCASE("agrees with dense exponentials of each factor") {
    const OscillatorParams prm{1.0, 0.3, 1.0};
    ComplexMatrix a2 = multiply(f.annihilation(), f.annihilation());
    ComplexMatrix ad2 = multiply(f.creation(), f.creation());
    a2 *= prm.gamma;
    ad2 *= std::conj(prm.gamma);
    ComplexMatrix h = f.hamiltonian();
    h *= -prm.beta;
    const ComplexMatrix want = multiply(multiply(expm_dense(a2), expm_dense(h)), expm_dense(ad2));
    const ComplexMatrix got = product_form(f, prm);
    CHECK(max_abs_diff(got, want) <= 1e-13 * max_abs(want));
    // (0,2) picks up γ̄√2 e^{−5/2} from k = 2 plus the k = 4, 6, … tail.
    CHECK(std::abs(got(0, 2) - 0.3 * std::sqrt(2.0) * std::exp(-2.5)) < 0.01);
  }
  SUBCASE("parity: entries with odd i - j vanish exactly") {
    const ComplexMatrix p = product_form(f, {1.0, Complex(0.3, 0.1), 1.0});
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j)
        if ((i + j) % 2 == 1) CHECK(p(i, j) == Complex{});
  }
  SUBCASE("serial and parallel backends agree") {
    const FockSystem big = build_fock(96, 1.0);
    const OscillatorParams prm{1.0, Complex(0.2, 0.3), 1.0};
    CHECK(max_abs_diff(product_form(big, prm, Backend::kSerial),
                       product_form(big, prm, Backend::kParallel)) == 0.0);
  }
  CHECK_THROWS_AS(product_form(f, {1.0, 0.3, 2.0}), DomainError);
}

TEST_CASE("gibbs_form examples") {
  const FockSystem f = build_fock(16, 1.0);
  const ComplexMatrix thermal = gibbs_form(f, {0.7, 0.0, 1.0});
  for (std::size_t i = 0; i < f.dim(); ++i)
    CHECK(std::abs(thermal(i, i) - std::exp(-0.7 * (i + 0.5))) <= 1e-15);

  const FockSystem f64 = build_fock(64, 1.0);
  const GibbsParams g = disentangled_to_gibbs({1.0, 0.3, 1.0});
  const ComplexMatrix e = gibbs_form(f64, g);
  CHECK(max_abs_diff(e, e.adjoint()) <= 1e-12);
  CHECK(min_hermitian_eigenvalue(e) >= -1e-10);
  CHECK(fock_block_residual(f64, {1.0, 0.3, 1.0}) <= 1e-8);
}

TEST_CASE("density examples") {
  const FockSystem f = build_fock(64, 1.0);
  SUBCASE("thermal state against the geometric series") {
    const DensityResult d = density(f, {1.0, 0.0, 1.0});
    CHECK(std::abs(d.z - oracle::thermal_z(1.0)) <= 1e-10 * d.z);
    CHECK(d.z == doctest::Approx(0.95951737566747186).epsilon(1e-12));
    CHECK(std::abs(d.mean_h - oracle::thermal_mean_h(1.0, 1.0)) <= 1e-10);
    CHECK(d.mean_h == doctest::Approx(1.0819767068693264).epsilon(1e-12));
    CHECK(d.purity == doctest::Approx(std::tanh(0.5)).epsilon(1e-12));
  }
  SUBCASE("ground-state limit") {
    const DensityResult d = density(f, {40.0, 0.0, 1.0});
    CHECK(d.rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.mean_h == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.purity == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("mean energy depends on gamma") {
    const DensityResult d0 = density(f, {1.0, 0.0, 1.0});
    const DensityResult d1 = density(f, {1.0, 0.3, 1.0});
    CHECK(d1.drift <= 1e-8);
    CHECK(std::abs(d1.mean_h - d0.mean_h) > 1e-3);
  }
  CHECK_THROWS_AS(density(f, {0.1, 1.0, 1.0}), DivergenceError);
}

TEST_CASE("truncation_check examples") {
  const FockSystem f = build_fock(64, 1.0);
  CHECK(truncation_check(f, {1.0, 0.0, 1.0}, 8) <= 1e-12);
  CHECK(truncation_check(f, {1.0, 0.3, 1.0}, 8) <= 1e-8);
  CHECK(truncation_check(f, {0.1, 1.0, 1.0}, 8) >= 1e-2);
  const double z64 = product_form(f, {0.1, 1.0, 1.0}).trace().real();
  const double z128 = product_form(build_fock(128, 1.0), {0.1, 1.0, 1.0}).trace().real();
  CHECK(z128 > 10.0 * z64);
  CHECK_THROWS_AS(truncation_check(f, {1.0, 0.3, 1.0}, 17), SizeError);
}

TEST_CASE("grid: physicality predicate matches truncation behaviour") {
  for (const auto& p : grids::su11_grid()) {
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    const bool physical = is_physical(disentangled_to_gibbs(p));
    const double d64 = truncation_check(FockSystem(64, p.hbar_omega), p, 8);
    if (!physical) {
      CHECK(d64 >= 1e-2);
      continue;
    }
    // Convergence is geometric but slow when βħω is small; demand a strict
    // decrease under doubling everywhere and the default tolerance once the
    // thermal factor is not too flat.
    const double d128 = truncation_check(FockSystem(128, p.hbar_omega), p, 8);
    CHECK(d128 < 0.5 * d64 + 1e-15);
    if (p.beta * p.hbar_omega >= 0.5) CHECK(d64 <= kDefaultDriftTolerance);
  }
}

TEST_CASE("grid: density invariants at converged truncation") {
  const std::size_t n = 64;
  int checked = 0;
  for (const auto& p : grids::su11_grid()) {
    if (!is_physical(disentangled_to_gibbs(p))) continue;
    const FockSystem f(n, p.hbar_omega);
    if (truncation_check(f, p, 8) > kDefaultDriftTolerance) {
      CHECK_THROWS_AS(density(f, p), DivergenceError);
      continue;
    }
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    const DensityResult d = density(f, p);
    ++checked;
    CHECK(std::abs(d.rho.trace() - 1.0) <= 1e-12);
    CHECK(max_abs_diff(d.rho, d.rho.adjoint()) <= 1e-12);
    CHECK(min_hermitian_eigenvalue(d.rho) >= -1e-10);
    CHECK(d.purity > 0.0);
    CHECK(d.purity <= 1.0 + 1e-12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((i + j) % 2 == 1) CHECK(std::abs(d.rho(i, j)) <= 1e-14);
  }
  CHECK(checked > 100);
}

TEST_CASE("grid: representation agreement on the interior block") {
  for (const auto& p : grids::su11_grid()) {
    if (!is_physical(disentangled_to_gibbs(p))) continue;
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    CHECK(fock_block_residual(FockSystem(64, p.hbar_omega), p) <= 1e-8);
  }
}
