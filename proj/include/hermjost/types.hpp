#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hermjost {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double sqrt_2pi = 2.5066282746310005024;
inline constexpr double sqrt2 = std::numbers::sqrt2;

inline constexpr cplx I{0.0, 1.0};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace hermjost
