#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grids.hpp"
#include "oracles.hpp"
#include "rkbch/errors.hpp"
#include "rkbch/pauli_oracle.hpp"
#include "rkbch/su11_map.hpp"

using namespace rkbch;

namespace {

// X = e^{iγ(σ₁−iσ₂)} e^{−βħωσ₃} e^{iγ̄(σ₁+iσ₂)}, every factor by long-double Taylor.
Matrix2 product_by_taylor(const OscillatorParams& p) {
  const Matrix2 l = oracle::expm2_taylor((kI * p.gamma) * (kSigma1 - kI * kSigma2));
  const Matrix2 d = oracle::expm2_taylor(Complex(-p.beta * p.hbar_omega) * kSigma3);
  const Matrix2 r = oracle::expm2_taylor((kI * std::conj(p.gamma)) * (kSigma1 + kI * kSigma2));
  return l * d * r;
}

struct LogOracle {
  double xi;
  Complex chi;
  double lambda_sq;
};

// Reads (ξ, χ, λ²) off the principal logarithm of X.
LogOracle from_log(const OscillatorParams& p) {
  const Matrix2 y = oracle::principal_log_unimodular(product_by_taylor(p));
  return {y(1, 1).real() / p.hbar_omega, y(1, 0) / (2.0 * kI), (y * y)(0, 0).real()};
}

// Frozen from a 40-digit principal-logarithm computation of X.
constexpr double kXiA = 0.96065534951440934, kChiA = 0.095602562034690332;
constexpr double kLambdaSqA = 0.88629930108026471;
constexpr double kXiB = -7.2153119340015554, kChiB = 3.8190426087795272;
constexpr double kLambdaSqB = -6.2796194857488801;

bool fields_close(const OscillatorParams& a, const OscillatorParams& b, double tol) {
  return oracle::rel_diff(a.beta, b.beta) <= tol && oracle::rel_diff(a.gamma, b.gamma) <= tol;
}

bool fields_close(const GibbsParams& a, const GibbsParams& b, double tol) {
  return oracle::rel_diff(a.xi, b.xi) <= tol && oracle::rel_diff(a.chi, b.chi) <= tol;
}

}  // namespace

TEST_CASE("in-test log oracle reproduces the frozen constants") {
  const LogOracle a = from_log({1.0, 0.3, 1.0});
  CHECK(a.xi == doctest::Approx(kXiA).epsilon(1e-13));
  CHECK(a.chi.real() == doctest::Approx(kChiA).epsilon(1e-13));
  CHECK(a.lambda_sq == doctest::Approx(kLambdaSqA).epsilon(1e-13));
  const LogOracle b = from_log({0.1, 1.0, 1.0});
  CHECK(b.xi == doctest::Approx(kXiB).epsilon(1e-12));
  CHECK(b.chi.real() == doctest::Approx(kChiB).epsilon(1e-12));
  CHECK(b.lambda_sq == doctest::Approx(kLambdaSqB).epsilon(1e-12));
}

TEST_CASE("derived_scalars examples") {
  SUBCASE("thermal collapses to lambda = beta*hbar_omega") {
    const DerivedScalars d = derived_scalars({1.0, 0.0, 1.0});
    CHECK(d.kappa == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(d.alpha == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(d.lambda_sq == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.sinh_lambda_sq == doctest::Approx(std::sinh(1.0) * std::sinh(1.0)).epsilon(1e-14));
  }
  SUBCASE("hyperbolic regime") {
    const DerivedScalars d = derived_scalars({1.0, 0.3, 1.0});
    CHECK(d.kappa == doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(d.alpha == doctest::Approx(std::sinh(1.0) - 2.0 * std::exp(-1.0) * 0.09).epsilon(1e-15));
    CHECK(d.alpha == doctest::Approx(1.1089829).epsilon(1e-7));
    CHECK(d.sinh_lambda_sq == doctest::Approx(1.1811223577).epsilon(1e-10));
    CHECK(d.lambda_sq == doctest::Approx(kLambdaSqA).epsilon(1e-13));
  }
  SUBCASE("trigonometric regime") {
    const DerivedScalars d = derived_scalars({0.1, 1.0, 1.0});
    CHECK(d.kappa == doctest::Approx(0.9048374).epsilon(1e-7));
    CHECK(d.alpha == doctest::Approx(-1.7095080).epsilon(1e-7));
    CHECK(d.sinh_lambda_sq < 0.0);
    CHECK(d.lambda_sq == doctest::Approx(kLambdaSqB).epsilon(1e-13));
    CHECK(std::sqrt(-d.lambda_sq) == doctest::Approx(2.5059).epsilon(1e-4));
  }
}

TEST_CASE("disentangled_to_gibbs examples") {
  const GibbsParams thermal = disentangled_to_gibbs({2.5, 0.0, 1.0});
  CHECK(thermal.xi == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(thermal.chi == Complex{});

  const GibbsParams a = disentangled_to_gibbs({1.0, 0.3, 1.0});
  CHECK(a.xi == doctest::Approx(kXiA).epsilon(1e-13));
  CHECK(a.chi.real() == doctest::Approx(kChiA).epsilon(1e-13));
  CHECK(a.chi.imag() == 0.0);

  const GibbsParams b = disentangled_to_gibbs({0.1, 1.0, 1.0});
  CHECK(b.xi == doctest::Approx(kXiB).epsilon(1e-13));
  CHECK(b.chi.real() == doctest::Approx(kChiB).epsilon(1e-13));
  CHECK_FALSE(is_physical(b));
}

TEST_CASE("gibbs_to_disentangled examples") {
  const OscillatorParams thermal = gibbs_to_disentangled({2.5, 0.0, 1.0});
  CHECK(thermal.beta == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(thermal.gamma == Complex{});

  const OscillatorParams a = gibbs_to_disentangled({kXiA, kChiA, 1.0});
  CHECK(a.beta == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(a.gamma.real() == doctest::Approx(0.3).epsilon(1e-13));

  const OscillatorParams b = gibbs_to_disentangled({kXiB, kChiB, 1.0});
  CHECK(b.beta == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(b.gamma.real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("is_physical examples") {
  CHECK(is_physical({2.5, 0.0, 1.0}));
  CHECK(is_physical({kXiA, kChiA, 1.0}));
  CHECK_FALSE(is_physical({kXiB, kChiB, 1.0}));
  CHECK_FALSE(is_physical({1.0, 0.5, 1.0}));   // λ² = 0
  CHECK_FALSE(is_physical({-1.0, 0.0, 1.0}));  // negative temperature
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(derived_scalars({1.0, 0.3, 0.0}), DomainError);
  CHECK_THROWS_AS(derived_scalars({std::nan(""), 0.3, 1.0}), DomainError);
  CHECK_THROWS_AS(disentangled_to_gibbs({0.1, 1.5, 1.0}), BranchError);  // α + κ ≈ −3.07
  CHECK_THROWS_AS(gibbs_to_disentangled({3.0, 1.2, 1.0}), DomainError);  // κ < 0
  CHECK_THROWS_AS(gibbs_to_disentangled({0.0, std::numbers::pi / 2, 1.0}), DegenerateError);
  CHECK_THROWS_AS(gibbs_from_alpha({0.0, 0.0, 1.0}, -2.0), DegenerateError);
}

TEST_CASE("grid: roundtrip both ways to 1e-10") {
  int checked = 0;
  for (const auto& p : grids::su11_grid()) {
    GibbsParams g;
    try {
      g = disentangled_to_gibbs(p);
    } catch (const BranchError&) {
      continue;
    }
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    CHECK(fields_close(gibbs_to_disentangled(g), p, 1e-10));
    CHECK(fields_close(disentangled_to_gibbs(gibbs_to_disentangled(g)), g, 1e-10));
    ++checked;
  }
  CHECK(checked == 240);
}

TEST_CASE("grid: consistency identity, thermal reduction, lambda^2 consistency") {
  for (const auto& p : grids::su11_grid()) {
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    const DerivedScalars d = derived_scalars(p);
    const double c = d.alpha + d.kappa;
    CHECK(std::abs(c * c - d.sinh_lambda_sq - 1.0) <= 1e-12 * std::max(1.0, c * c));
    CHECK((d.lambda_sq > 0) == (d.sinh_lambda_sq > 0));

    const GibbsParams g = disentangled_to_gibbs(p);
    CHECK(std::abs(lambda_sq(g) - d.lambda_sq) <= 1e-10 * std::max(1e-300, std::abs(d.lambda_sq)));
    if (p.gamma == Complex{}) {
      CHECK(g.chi == Complex{});
      CHECK(std::abs(g.xi - p.beta) <= 1e-14 * std::max(1.0, p.beta));
    }
  }
}

TEST_CASE("grid: phase equivariance") {
  for (const auto& p : grids::su11_grid()) {
    const GibbsParams g = disentangled_to_gibbs(p);
    for (const double phi : {0.3, 1.0, 2.5, -1.2}) {
      const Complex phase = std::polar(1.0, phi);
      const GibbsParams h = disentangled_to_gibbs({p.beta, phase * p.gamma, p.hbar_omega});
      CHECK(std::abs(h.xi - g.xi) <= 1e-12 * std::max(1.0, std::abs(g.xi)));
      CHECK(std::abs(h.chi - phase * g.chi) <= 1e-12 * std::max(1.0, std::abs(g.chi)));
    }
  }
}

TEST_CASE("grid: maps agree with the principal-log oracle") {
  for (const auto& p : grids::su11_grid()) {
    CAPTURE(p.beta);
    CAPTURE(p.gamma);
    CAPTURE(p.hbar_omega);
    const LogOracle o = from_log(p);
    const GibbsParams g = disentangled_to_gibbs(p);
    CHECK(std::abs(g.xi - o.xi) <= 1e-9 * std::max(1.0, std::abs(o.xi)));
    CHECK(std::abs(g.chi - o.chi) <= 1e-9 * std::max(1.0, std::abs(o.chi)));
  }
}

TEST_CASE("printed alternative for alpha breaks the identity") {
  const OscillatorParams p{0.1, 1.0, 1.0};
  const double kappa = std::exp(-p.beta * p.hbar_omega);
  const double g2 = std::norm(p.gamma);
  const double misprint = (1.0 - kappa * kappa - 4.0 * kappa * g2) / (2.0 * kappa);
  const double adopted = (1.0 - kappa * kappa - 4.0 * kappa * kappa * g2) / (2.0 * kappa);
  CHECK(adopted == doctest::Approx(derived_scalars(p).alpha).epsilon(1e-14));

  const Matrix2 x = pauli_product_x(p);
  const double bad = max_abs_diff(x, expm2_closed(gibbs_generator_y(gibbs_from_alpha(p, misprint))));
  const double good = max_abs_diff(x, expm2_closed(gibbs_generator_y(gibbs_from_alpha(p, adopted))));
  CHECK(bad > 1e-3);
  CHECK(good <= 1e-12);
}
