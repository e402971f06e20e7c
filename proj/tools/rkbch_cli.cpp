// rkbch: coefficient maps, oracle checks, sweeps and observables for the
// su(1,1) / su(2) disentangling identities.
//
// Exit codes: 0 ok, 1 malformed arguments, 2 map precondition failed,
// 3 residual above tolerance, 4 Fock trace did not converge.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rkbch/errors.hpp"
#include "rkbch/fock_oracle.hpp"
#include "rkbch/pauli_oracle.hpp"
#include "rkbch/report.hpp"
#include "rkbch/su11_map.hpp"
#include "rkbch/su2_map.hpp"
#include "rkbch/sweep.hpp"

namespace {

using namespace rkbch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMap = 2;
constexpr int kExitResidual = 3;
constexpr int kExitDivergence = 4;

constexpr const char* kFormatEnv = "RKBCH_FORMAT";

/// Malformed or inconsistent command-line configuration.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra = "su11";
  bool forward = false;
  bool inverse = false;
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> xi;
  std::optional<std::string> chi;
  std::string hbar_omega = "1";
  std::string oracle = "pauli";
  std::size_t fock_dim = kDefaultFockDim;
  double tol = 1e-10;
  double fock_tol = kDefaultDriftTolerance;
  std::string format;
  std::string out;

  // sweep axes
  std::string betas;
  std::string gamma_abs = "0";
  std::string gamma_arg = "0";
  std::string hbar_omegas = "1";
};

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

double real_arg(const std::optional<std::string>& v, const char* name) {
  if (!v) throw UsageError(fmt::format("--{} is required", name));
  return as_usage([&] { return parse_real(*v); });
}

Complex complex_arg(const std::optional<std::string>& v) {
  if (!v) return {};
  return as_usage([&] { return parse_complex(*v); });
}

Algebra algebra_of(const RunConfig& c) {
  return as_usage([&] { return parse_algebra(c.algebra); });
}

double hbar_omega_of(const RunConfig& c) {
  const double w = as_usage([&] { return parse_real(c.hbar_omega); });
  if (!(w > 0.0)) throw UsageError("--hbar-omega must be positive");
  return w;
}

OutputFormat format_of(const RunConfig& c) {
  std::string name = c.format;
  if (name.empty()) {
    const char* env = std::getenv(kFormatEnv);
    name = env && *env ? env : "human";
  }
  return as_usage([&] { return parse_format(name); });
}

void check_common(const RunConfig& c, bool uses_fock) {
  if (!(c.tol > 0.0 && c.tol < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  if (!(c.fock_tol > 0.0 && c.fock_tol < 1.0)) throw UsageError("--fock-tol must lie in (0, 1)");
  if (uses_fock && c.fock_dim < 8) throw UsageError("--fock-dim must be at least 8");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError(fmt::format("cannot open '{}' for writing", c.out));
  file << text;
}

/// (β, γ, ħω) from either direction's parameters.
OscillatorParams su11_params(const RunConfig& c) {
  const double w = hbar_omega_of(c);
  if (c.inverse) {
    return gibbs_to_disentangled({real_arg(c.xi, "xi"), complex_arg(c.chi), w});
  }
  return {real_arg(c.beta, "beta"), complex_arg(c.gamma), w};
}

Su2DisentangledParams su2_params(const RunConfig& c) {
  if (c.inverse) return su2_inverse({real_arg(c.xi, "xi"), complex_arg(c.chi)});
  return {real_arg(c.beta, "beta"), complex_arg(c.gamma)};
}

int cmd_map(const RunConfig& c) {
  check_common(c, false);
  const Algebra algebra = algebra_of(c);
  const OutputFormat fmt = format_of(c);
  Record r;
  r.set("algebra", std::string(to_string(algebra)));
  r.set("direction", std::string(c.inverse ? "inverse" : "forward"));

  if (algebra == Algebra::kSu11) {
    const double w = hbar_omega_of(c);
    OscillatorParams p;
    GibbsParams g;
    if (c.inverse) {
      g = {real_arg(c.xi, "xi"), complex_arg(c.chi), w};
      r.set("xi", g.xi).set("chi", g.chi).set("hbar_omega", w);
      p = gibbs_to_disentangled(g);
      r.set("beta", p.beta).set("gamma", p.gamma);
    } else {
      p = {real_arg(c.beta, "beta"), complex_arg(c.gamma), w};
      r.set("beta", p.beta).set("gamma", p.gamma).set("hbar_omega", w);
      g = disentangled_to_gibbs(p);
      r.set("xi", g.xi).set("chi", g.chi);
    }
    const DerivedScalars d = derived_scalars(p);
    r.set("kappa", d.kappa).set("alpha", d.alpha).set("lambda_sq", d.lambda_sq);
    r.set("physical", is_physical(g));
  } else {
    if (c.inverse) {
      const Su2GibbsParams g{real_arg(c.xi, "xi"), complex_arg(c.chi)};
      r.set("xi", g.xi).set("chi", g.chi);
      const Su2DisentangledParams p = su2_inverse(g);
      r.set("beta", p.beta).set("gamma", p.gamma).set("lambda_sq", su2_lambda_sq(g));
    } else {
      const Su2DisentangledParams p{real_arg(c.beta, "beta"), complex_arg(c.gamma)};
      r.set("beta", p.beta).set("gamma", p.gamma);
      const Su2GibbsParams g = su2_forward(p);
      r.set("xi", g.xi).set("chi", g.chi).set("lambda_sq", su2_lambda_sq(g));
    }
  }
  emit(c, render(r, fmt));
  return kExitOk;
}

int cmd_verify(const RunConfig& c) {
  const Algebra algebra = algebra_of(c);
  const Oracle oracle = as_usage([&] { return parse_oracle(c.oracle); });
  const bool uses_fock = oracle != Oracle::kPauli;
  check_common(c, uses_fock);
  if (algebra == Algebra::kSu2 && uses_fock)
    throw UsageError("the fock oracle applies to su11 only");
  const OutputFormat fmt = format_of(c);

  Record r;
  r.set("algebra", std::string(to_string(algebra)));
  bool ok = true;
  if (algebra == Algebra::kSu2) {
    const Su2DisentangledParams p = su2_params(c);
    const Su2GibbsParams g = su2_forward(p);
    const double res = verify_su2(p);
    ok = res <= c.tol;
    r.set("beta", p.beta).set("gamma", p.gamma).set("xi", g.xi).set("chi", g.chi);
    r.set("pauli_residual", res).set("pauli_status", std::string(ok ? "pass" : "fail"));
    r.set("tol", c.tol);
  } else {
    const OscillatorParams p = su11_params(c);
    const GibbsParams g = disentangled_to_gibbs(p);
    const bool physical = is_physical(g);
    r.set("beta", p.beta).set("gamma", p.gamma).set("hbar_omega", p.hbar_omega);
    r.set("xi", g.xi).set("chi", g.chi).set("physical", physical);
    if (oracle != Oracle::kFock) {
      const double res = verify_su11(p);
      const bool pass = res <= c.tol;
      ok = ok && pass;
      r.set("pauli_residual", res).set("pauli_status", std::string(pass ? "pass" : "fail"));
    }
    if (uses_fock) {
      r.set("fock_dim", static_cast<std::int64_t>(c.fock_dim));
      if (physical) {
        const double res = fock_block_residual(FockSystem(c.fock_dim, p.hbar_omega), p);
        const bool pass = res <= c.fock_tol;
        ok = ok && pass;
        r.set("fock_residual", res).set("fock_status", std::string(pass ? "pass" : "fail"));
      } else {
        r.set("fock_residual", std::monostate{}).set("fock_status", std::string("skipped"));
      }
    }
    r.set("tol", c.tol);
    if (uses_fock) r.set("fock_tol", c.fock_tol);
  }
  emit(c, render(r, fmt));
  if (!ok) {
    std::cerr << "rkbch: residual exceeds tolerance\n";
    return kExitResidual;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& c) {
  GridSpec spec;
  spec.algebra = algebra_of(c);
  spec.oracle = as_usage([&] { return parse_oracle(c.oracle); });
  check_common(c, spec.oracle != Oracle::kPauli);
  if (spec.algebra == Algebra::kSu2 && spec.oracle != Oracle::kPauli)
    throw UsageError("the fock oracle applies to su11 only");
  spec.fock_dim = c.fock_dim;
  if (c.betas.empty()) throw UsageError("--betas is required");
  spec.betas = as_usage([&] { return parse_grid_axis(c.betas); });
  spec.gamma_abs = as_usage([&] { return parse_grid_axis(c.gamma_abs); });
  spec.gamma_arg = as_usage([&] { return parse_grid_axis(c.gamma_arg); });
  spec.hbar_omegas = as_usage([&] { return parse_grid_axis(c.hbar_omegas); });
  for (const double w : spec.hbar_omegas)
    if (!(w > 0.0)) throw UsageError("--hbar-omegas values must be positive");
  const OutputFormat fmt = format_of(c);
  const auto rows = as_usage([&] { return run_sweep(spec); });
  emit(c, render(rows, fmt));
  return kExitOk;
}

int cmd_observables(const RunConfig& c) {
  check_common(c, true);
  if (algebra_of(c) != Algebra::kSu11) throw UsageError("observables apply to su11 only");
  const OutputFormat fmt = format_of(c);
  const OscillatorParams p = su11_params(c);
  const GibbsParams g = disentangled_to_gibbs(p);
  const FockSystem f(c.fock_dim, p.hbar_omega);
  const DensityResult d = density(f, p, c.fock_tol);

  Record r;
  r.set("algebra", std::string("su11"));
  r.set("beta", p.beta).set("gamma", p.gamma).set("hbar_omega", p.hbar_omega);
  r.set("fock_dim", static_cast<std::int64_t>(c.fock_dim));
  r.set("xi", g.xi).set("chi", g.chi).set("physical", is_physical(g));
  r.set("Z", d.z).set("mean_H", d.mean_h).set("purity", d.purity).set("drift", d.drift);
  emit(c, render(r, fmt));
  return kExitOk;
}

void add_point_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--algebra", c.algebra, "su11 or su2")->capture_default_str();
  auto* fwd = sub->add_flag("--forward", c.forward, "(beta, gamma) -> (xi, chi) [default]");
  auto* inv = sub->add_flag("--inverse", c.inverse, "(xi, chi) -> (beta, gamma)");
  fwd->excludes(inv);
  sub->add_option("--beta", c.beta, "disentangled-form beta");
  sub->add_option("--gamma", c.gamma, "disentangled-form gamma, e.g. 0.3 or 0.2+0.4i");
  sub->add_option("--xi", c.xi, "Gibbs-form xi");
  sub->add_option("--chi", c.chi, "Gibbs-form chi, e.g. 1 or 0.1-0.2i");
  sub->add_option("--hbar-omega", c.hbar_omega, "oscillator quantum (su11)")->capture_default_str();
}

void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format,
                  fmt::format("json, csv or human (default from ${}, else human)", kFormatEnv));
  sub->add_option("--out", c.out, "write output to FILE instead of stdout");
}

void add_oracle_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--oracle", c.oracle, "pauli, fock or both")->capture_default_str();
  sub->add_option("--fock-dim", c.fock_dim, "Fock truncation dimension")->capture_default_str();
  sub->add_option("--tol", c.tol, "tolerance for the 2x2 residual")->capture_default_str();
  sub->add_option("--fock-tol", c.fock_tol, "tolerance for Fock block residual and drift")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disentangling coefficient maps for su(1,1) and su(2)"};
  app.require_subcommand(1);
  RunConfig c;

  auto* map = app.add_subcommand("map", "convert between disentangled and Gibbs parameters");
  add_point_options(map, c);
  add_output_options(map, c);

  auto* verify = app.add_subcommand("verify", "check the identity with the 2x2 / Fock oracles");
  add_point_options(verify, c);
  add_oracle_options(verify, c);
  add_output_options(verify, c);

  auto* sweep = app.add_subcommand("sweep", "tabulate maps and residuals over a parameter grid");
  sweep->add_option("--algebra", c.algebra, "su11 or su2")->capture_default_str();
  sweep->add_option("--betas", c.betas, "beta axis: v1,v2,... or start:stop:count");
  sweep->add_option("--gamma-abs", c.gamma_abs, "|gamma| axis")->capture_default_str();
  sweep->add_option("--gamma-arg", c.gamma_arg, "arg gamma axis, pi multiples allowed")
      ->capture_default_str();
  sweep->add_option("--hbar-omegas", c.hbar_omegas, "hbar*omega axis (su11)")
      ->capture_default_str();
  add_oracle_options(sweep, c);
  add_output_options(sweep, c);

  auto* obs = app.add_subcommand("observables", "Z, <H> and purity from the truncated Fock space");
  add_point_options(obs, c);
  obs->add_option("--fock-dim", c.fock_dim, "Fock truncation dimension")->capture_default_str();
  obs->add_option("--fock-tol", c.fock_tol, "truncation drift tolerance")->capture_default_str();
  add_output_options(obs, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (map->parsed()) return cmd_map(c);
    if (verify->parsed()) return cmd_verify(c);
    if (sweep->parsed()) return cmd_sweep(c);
    if (obs->parsed()) return cmd_observables(c);
  } catch (const UsageError& e) {
    std::cerr << "rkbch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivergenceError& e) {
    std::cerr << "rkbch: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const BranchError& e) {
    std::cerr << "rkbch: branch precondition failed: " << e.what() << "\n";
    return kExitMap;
  } catch (const DegenerateError& e) {
    std::cerr << "rkbch: degenerate point: " << e.what() << "\n";
    return kExitMap;
  } catch (const DomainError& e) {
    std::cerr << "rkbch: domain precondition failed: " << e.what() << "\n";
    return kExitMap;
  } catch (const Error& e) {
    std::cerr << "rkbch: " << e.what() << "\n";
    return kExitMap;
  }
  return kExitUsage;
}
