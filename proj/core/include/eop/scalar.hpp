#ifndef EOP_SCALAR_HPP
#define EOP_SCALAR_HPP

#include <cmath>
#include <complex>

namespace eop {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// |z| without overflow for the magnitude checks sprinkled through the solvers
inline double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

} // namespace eop

#endif
