#include "rkbch/sweep.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "rkbch/errors.hpp"
#include "rkbch/pauli_oracle.hpp"
#include "rkbch/su11_map.hpp"
#include "rkbch/su2_map.hpp"

namespace rkbch {

Algebra parse_algebra(std::string_view name) {
  if (name == "su11") return Algebra::kSu11;
  if (name == "su2") return Algebra::kSu2;
  throw DomainError(fmt::format("unknown algebra '{}'", name));
}

Oracle parse_oracle(std::string_view name) {
  if (name == "pauli") return Oracle::kPauli;
  if (name == "fock") return Oracle::kFock;
  if (name == "both") return Oracle::kBoth;
  throw DomainError(fmt::format("unknown oracle '{}'", name));
}

std::string_view to_string(Algebra a) { return a == Algebra::kSu11 ? "su11" : "su2"; }

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  return text;
}

double parse_number(std::string_view text) {
  // std::from_chars for double is locale-independent.
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value))
    throw DomainError(fmt::format("malformed number '{}'", text));
  return value;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(text);
  const std::string_view coeff = text.substr(0, pi_at);
  double value = std::numbers::pi;
  if (coeff == "-")
    value = -value;
  else if (!coeff.empty() && coeff != "+")
    value *= parse_number(coeff.back() == '*' ? coeff.substr(0, coeff.size() - 1) : coeff);
  std::string_view rest = text.substr(pi_at + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw DomainError(fmt::format("malformed number '{}'", text));
    const double den = parse_number(rest.substr(1));
    if (den == 0.0) throw DomainError(fmt::format("division by zero in '{}'", text));
    value /= den;
  }
  return value;
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw DomainError("empty complex literal");
  const char last = text.back();
  if (last != 'i' && last != 'j') return {parse_number(text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that does not belong to an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_text.empty() || im_text == "+")
    im = 1.0;
  else if (im_text == "-")
    im = -1.0;
  else
    im = parse_number(im_text);
  return {re_text.empty() ? 0.0 : parse_number(re_text), im};
}

std::vector<double> parse_grid_axis(std::string_view text) {
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
      throw DomainError(fmt::format("range '{}' must be start:stop:count", text));
    const double start = parse_real(text.substr(0, c1));
    const double stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
    const double count = parse_number(text.substr(c2 + 1));
    if (count < 1 || count != std::floor(count) || count > static_cast<double>(kMaxGridPoints))
      throw DomainError(fmt::format("range '{}' has an invalid count", text));
    const auto n = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < n; ++i)
      values.push_back(n == 1 ? start
                              : start + (stop - start) * static_cast<double>(i) /
                                            static_cast<double>(n - 1));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      values.push_back(parse_real(piece));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (values.empty()) throw DomainError("empty grid axis");
  return values;
}

std::size_t grid_size(const GridSpec& spec) {
  const std::size_t omegas = spec.algebra == Algebra::kSu11 ? spec.hbar_omegas.size() : 1;
  return spec.betas.size() * spec.gamma_abs.size() * spec.gamma_arg.size() * omegas;
}

const std::vector<std::string_view>& sweep_columns() {
  static const std::vector<std::string_view> cols{
      "algebra", "beta",      "gamma",     "hbar_omega",     "xi",
      "chi",     "kappa",     "alpha",     "lambda_sq",      "physical",
      "pauli_residual",       "fock_residual",               "error"};
  return cols;
}

Record sweep_row(const GridSpec& spec, const GridPoint& point) {
  Record r;
  for (const auto col : sweep_columns()) r.set(std::string(col), std::monostate{});
  r.set("algebra", std::string(to_string(spec.algebra)));
  r.set("beta", point.beta);
  r.set("gamma", point.gamma);

  try {
    if (spec.algebra == Algebra::kSu2) {
      const Su2DisentangledParams p{point.beta, point.gamma};
      const Su2GibbsParams g = su2_forward(p);
      r.set("xi", g.xi);
      r.set("chi", g.chi);
      r.set("lambda_sq", su2_lambda_sq(g));
      r.set("pauli_residual", verify_su2(p));
      return r;
    }

    const OscillatorParams p{point.beta, point.gamma, point.hbar_omega};
    r.set("hbar_omega", point.hbar_omega);
    const DerivedScalars d = derived_scalars(p);
    r.set("kappa", d.kappa);
    r.set("alpha", d.alpha);
    r.set("lambda_sq", d.lambda_sq);
    const GibbsParams g = disentangled_to_gibbs(p);
    r.set("xi", g.xi);
    r.set("chi", g.chi);
    const bool physical = is_physical(g);
    r.set("physical", physical);
    if (spec.oracle != Oracle::kFock) r.set("pauli_residual", verify_su11(p));
    if (spec.oracle != Oracle::kPauli && physical) {
      const FockSystem f(spec.fock_dim, p.hbar_omega);
      r.set("fock_residual", fock_block_residual(f, p));
    }
  } catch (const Error& e) {
    std::string kind = "Error";
    if (dynamic_cast<const BranchError*>(&e)) kind = "BranchError";
    else if (dynamic_cast<const DegenerateError*>(&e)) kind = "DegenerateError";
    else if (dynamic_cast<const DomainError*>(&e)) kind = "DomainError";
    else if (dynamic_cast<const ConvergenceError*>(&e)) kind = "ConvergenceError";
    else if (dynamic_cast<const SizeError*>(&e)) kind = "SizeError";
    r.set("error", fmt::format("{}: {}", kind, e.what()));
  }
  return r;
}

std::vector<Record> run_sweep(const GridSpec& spec, Backend backend) {
  const std::size_t total = grid_size(spec);
  if (total == 0) throw DomainError("sweep grid is empty");
  if (total > kMaxGridPoints) throw DomainError("sweep grid exceeds 10^6 points");
  for (const double g : spec.gamma_abs)
    if (g < 0.0) throw DomainError("|gamma| grid values must be nonnegative");

  const std::size_t n_omega = spec.algebra == Algebra::kSu11 ? spec.hbar_omegas.size() : 1;
  const std::size_t n_arg = spec.gamma_arg.size();
  const std::size_t n_abs = spec.gamma_abs.size();

  std::vector<Record> rows(total);
  const auto fill = [&](std::size_t idx) {
    std::size_t rest = idx;
    const std::size_t io = rest % n_omega;
    rest /= n_omega;
    const std::size_t ia = rest % n_arg;
    rest /= n_arg;
    const std::size_t ig = rest % n_abs;
    const std::size_t ib = rest / n_abs;
    const double omega = spec.algebra == Algebra::kSu11 ? spec.hbar_omegas[io] : 1.0;
    rows[idx] = sweep_row(spec, {spec.betas[ib], std::polar(spec.gamma_abs[ig], spec.gamma_arg[ia]),
                                 omega});
  };

  if (backend == Backend::kSerial) {
    for (std::size_t i = 0; i < total; ++i) fill(i);
  } else {
    const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) fill(static_cast<std::size_t>(i));
  }
  return rows;
}

}  // namespace rkbch
