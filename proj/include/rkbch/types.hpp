#pragma once

#include <complex>

namespace rkbch {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace rkbch
