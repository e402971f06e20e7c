#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rkbch/fock_oracle.hpp"
#include "rkbch/kernels.hpp"
#include "rkbch/report.hpp"

namespace rkbch {

enum class Algebra { kSu11, kSu2 };
enum class Oracle { kPauli, kFock, kBoth };

Algebra parse_algebra(std::string_view name);
Oracle parse_oracle(std::string_view name);
std::string_view to_string(Algebra a);

/// Parses a real number; also accepts multiples of pi such as "pi/3",
/// "-pi" or "2pi/3". Throws DomainError on malformed input.
double parse_real(std::string_view text);

/// Parses "a", "bi", "a+bi" or "a-bi" (a trailing j is also accepted).
Complex parse_complex(std::string_view text);

/// Parses "v1,v2,..." or a linear range "start:stop:count".
/// Throws DomainError on malformed input or an empty result.
std::vector<double> parse_grid_axis(std::string_view text);

struct GridSpec {
  Algebra algebra = Algebra::kSu11;
  std::vector<double> betas;
  std::vector<double> gamma_abs;
  std::vector<double> gamma_arg;
  std::vector<double> hbar_omegas{1.0};  // ignored for su(2)
  Oracle oracle = Oracle::kPauli;
  std::size_t fock_dim = kDefaultFockDim;
};

/// Number of rows run_sweep will emit.
std::size_t grid_size(const GridSpec& spec);

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Column order of every sweep row.
const std::vector<std::string_view>& sweep_columns();

struct GridPoint {
  double beta = 0.0;
  Complex gamma{};
  double hbar_omega = 1.0;
};

/// Map, derived scalars, physicality and oracle residuals for one point.
/// Failures are reported in the error column instead of thrown.
Record sweep_row(const GridSpec& spec, const GridPoint& point);

/// One row per grid point, in lexicographic order of (β, |γ|, arg γ, ħω)
/// indices. Per-point failures land in the error column. Points are
/// evaluated concurrently when backend allows it; row order never depends
/// on scheduling.
std::vector<Record> run_sweep(const GridSpec& spec, Backend backend = Backend::kAuto);

}  // namespace rkbch
