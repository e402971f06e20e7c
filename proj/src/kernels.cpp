#include "rkbch/kernels.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rkbch {
namespace kernels {

// Both kernels accumulate every C(i, j) over k in the same order, so their
// results are bitwise identical.

void gemm_serial(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                 std::size_t n) {
  assert(a.size() == n * n && b.size() == n * n && c.size() == n * n);
  std::fill(c.begin(), c.end(), Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = c.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void gemm_parallel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                   std::size_t n) {
  assert(a.size() == n * n && b.size() == n * n && c.size() == n * n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex* crow = c.data() + i * n;
    std::fill(crow, crow + n, Complex{});
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

bool use_parallel(Backend backend, std::size_t n) {
  switch (backend) {
    case Backend::kSerial:
      return false;
    case Backend::kParallel:
      return true;
    case Backend::kAuto:
#ifdef _OPENMP
      return n >= kParallelMinDim && !omp_in_parallel();
#else
      return false;
#endif
  }
  return false;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kernels

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b, Backend backend) {
  assert(a.dim() == b.dim());
  ComplexMatrix c(a.dim());
  if (kernels::use_parallel(backend, a.dim()))
    kernels::gemm_parallel(a.data(), b.data(), c.data(), a.dim());
  else
    kernels::gemm_serial(a.data(), b.data(), c.data(), a.dim());
  return c;
}

}  // namespace rkbch
