#include "rkbch/expm.hpp"

#include <cmath>
#include <string>

#include "rkbch/errors.hpp"

namespace rkbch {

namespace {

// Scaled arguments satisfy ‖A‖₁ ≤ 1/2, where degree-18 Taylor truncation
// error is far below double rounding.
constexpr double kScaledNorm = 0.5;

}  // namespace

ComplexMatrix expm_dense(const ComplexMatrix& m, int order_hint, int max_squarings,
                         Backend backend) {
  if (!m.all_finite()) throw ShapeError("expm_dense: matrix has non-finite entries");
  const std::size_t n = m.dim();
  if (n == 0) return m;
  const int order = order_hint < 1 ? kDefaultTaylorOrder : order_hint;

  const double norm = norm1(m);
  int squarings = 0;
  if (norm > kScaledNorm) squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNorm)));
  if (squarings > max_squarings)
    throw ConvergenceError("expm_dense: needs " + std::to_string(squarings) +
                           " squarings, limit is " + std::to_string(max_squarings));

  ComplexMatrix a = m;
  a *= std::ldexp(1.0, -squarings);

  // Horner: P ← 𝕀 + A·P / k for k = order … 1.
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix p = eye;
  for (int k = order; k >= 1; --k) {
    p = multiply(a, p, backend);
    p *= 1.0 / k;
    p += eye;
  }
  for (int s = 0; s < squarings; ++s) p = multiply(p, p, backend);
  return p;
}

}  // namespace rkbch
