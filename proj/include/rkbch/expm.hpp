#pragma once

#include "rkbch/kernels.hpp"
#include "rkbch/matrix.hpp"

namespace rkbch {

inline constexpr int kDefaultTaylorOrder = 18;
inline constexpr int kDefaultMaxSquarings = 60;

/// Matrix exponential by scaling and squaring around a Taylor kernel of
/// degree order_hint. The argument is scaled until its 1-norm is at most 1/2.
///
/// Throws ShapeError on non-finite input and ConvergenceError if more than
/// max_squarings squarings would be needed.
ComplexMatrix expm_dense(const ComplexMatrix& m, int order_hint = kDefaultTaylorOrder,
                         int max_squarings = kDefaultMaxSquarings,
                         Backend backend = Backend::kAuto);

}  // namespace rkbch
