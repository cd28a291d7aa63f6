#ifndef EOP_DETAIL_POLYMATH_HPP
#define EOP_DETAIL_POLYMATH_HPP

#include <complex>
#include <vector>

// Precision-generic cores for the closed-form evaluations. The residual
// oracle differentiates closed-form eigenfunctions with 5-point stencils;
// reaching the 1e-8 residual floor requires evaluating them in extended
// precision, so the formula layer is templated on the real type.

namespace eop::detail {

template <class R>
std::complex<R> laguerre_t(int n, std::complex<R> a, std::complex<R> x) {
  using C = std::complex<R>;
  if (n < 0) return C(0);
  if (n == 0) return C(1);
  C pm1(1);
  C p = C(1) + a - x;
  for (int k = 2; k <= n; ++k) {
    C next = ((C(R(2 * k - 1)) + a - x) * p - (C(R(k - 1)) + a) * pm1) / R(k);
    pm1 = p;
    p = next;
  }
  return p;
}

template <class R>
std::complex<R> jacobi_t(int n, std::complex<R> a, std::complex<R> b,
                         std::complex<R> z) {
  using C = std::complex<R>;
  if (n < 0) return C(0);
  if (n == 0) return C(1);
  C pm1(1);
  C p = (a - b) / R(2) + (a + b + R(2)) / R(2) * z;
  for (int k = 2; k <= n; ++k) {
    C s = C(R(2 * k)) + a + b;
    C c1 = R(2 * k) * (C(R(k)) + a + b) * (s - R(2));
    C c2 = (s - R(1)) * (s * (s - R(2)) * z + a * a - b * b);
    C c3 = R(2) * (C(R(k - 1)) + a) * (C(R(k - 1)) + b) * s;
    C next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

template <class R>
std::complex<R> jacobi_deriv_t(int n, std::complex<R> a, std::complex<R> b,
                               std::complex<R> z, int order) {
  using C = std::complex<R>;
  if (n - order < 0) return C(0);
  C c(1);
  for (int j = 0; j < order; ++j) c *= (C(R(n)) + a + b + R(1 + j)) / R(2);
  return c * jacobi_t<R>(n - order, a + R(order), b + R(order), z);
}

template <class R>
std::complex<R> horner_t(const std::vector<std::complex<double>>& coeffs,
                         std::complex<R> z) {
  using C = std::complex<R>;
  C acc(R(coeffs.back().real()), R(coeffs.back().imag()));
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
    acc = acc * z + C(R(it->real()), R(it->imag()));
  return acc;
}

} // namespace eop::detail

#endif
