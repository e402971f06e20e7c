#pragma once

#include <cstddef>
#include <span>

#include "rkbch/matrix.hpp"

namespace rkbch {

enum class Backend {
  kSerial,    // reference loops, single thread
  kParallel,  // OpenMP over output rows
  kAuto,      // parallel for large n outside an enclosing parallel region
};

namespace kernels {

/// C = A·B for n×n row-major operands. C must not alias A or B.
void gemm_serial(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                 std::size_t n);
void gemm_parallel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                   std::size_t n);

/// Below this dimension kAuto stays serial.
inline constexpr std::size_t kParallelMinDim = 48;

bool use_parallel(Backend backend, std::size_t n);

int max_threads();

}  // namespace kernels

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b,
                       Backend backend = Backend::kAuto);

}  // namespace rkbch
