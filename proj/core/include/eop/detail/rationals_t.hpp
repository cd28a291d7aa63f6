#ifndef EOP_DETAIL_RATIONALS_T_HPP
#define EOP_DETAIL_RATIONALS_T_HPP

#include <cmath>
#include <string>

#include "eop/detail/polymath.hpp"
#include "eop/errors.hpp"

// Precision-generic rational potential terms. The public API wraps these at
// double; the residual oracle instantiates them at long double.

namespace eop::detail {

template <class R>
void check_denominator(std::complex<R> den, std::complex<R> z, const char* who) {
  if (std::abs(den) < R(1e-13) * (R(1) + std::abs(z))) {
    throw SingularDenominatorError(std::string(who) + ": denominator vanishes near z=(" +
                                   std::to_string(double(z.real())) + "," +
                                   std::to_string(double(z.imag())) + ")");
  }
}

/// Shared bracket of the X_m rational terms (theta I/II/PT2, phi I/II/PT1):
///   -2m t - t (al+be+(al-be+1) z) Pr + t^2 sinsq/2 Pr^2,
/// t = al-be-m+1, Pr = P_{m-1}^{(-al,be)}(z) / P_m^{(-al-1,be-1)}(z).
template <class R>
std::complex<R> xm_rational_bracket(int m, std::complex<R> al, std::complex<R> be,
                                    std::complex<R> z, std::complex<R> sinsq) {
  using C = std::complex<R>;
  if (m == 0) return C(0);
  C num = jacobi_t<R>(m - 1, -al, be, z);
  C den = jacobi_t<R>(m, -al - R(1), be - R(1), z);
  check_denominator(den, z, "xm_rational");
  C pr = num / den;
  C t = al - be - R(m) + R(1);
  return -R(2 * m) * t - t * (al + be + (al - be + R(1)) * z) * pr +
         t * t * sinsq / R(2) * pr * pr;
}

/// Eckart-type rational term in the angle u (theta, or u = p*phi):
///   -2 csc^2 u [ 2i cot u qd/q - csc^2 u (qdd/q - (qd/q)^2) - m ],
/// q = q^{(A,B)}_m(z) = P_m^{(alpha_m,beta_m)}(z), z = i cot u, dots = d/dz.
template <class R>
std::complex<R> eckart_rational_u(int m, std::complex<R> A, std::complex<R> B, R u) {
  using C = std::complex<R>;
  if (m == 0) return C(0);
  C d = A - R(1) + R(m);
  C am = -d + B / d;
  C bm = -d - B / d;
  R cotu = std::cos(u) / std::sin(u);
  R csc2 = R(1) / (std::sin(u) * std::sin(u));
  C z(R(0), cotu);
  C q = jacobi_t<R>(m, am, bm, z);
  check_denominator(q, z, "eckart_rational");
  C q1 = jacobi_deriv_t<R>(m, am, bm, z, 1) / q;
  C q2 = jacobi_deriv_t<R>(m, am, bm, z, 2) / q;
  C bracket = C(R(0), R(2) * cotu) * q1 - csc2 * (q2 - q1 * q1) - R(m);
  return -R(2) * csc2 * bracket;
}

template <class R>
std::complex<R> radial_rational_t(int m1, R delta_t, R omega, R r) {
  using C = std::complex<R>;
  if (m1 == 0) return C(0);
  C u(-omega * r * r / R(2));
  C den = laguerre_t<R>(m1, C(delta_t - R(1)), u);
  check_denominator(den, u, "radial_rational");
  C t2 = laguerre_t<R>(m1 - 1, C(delta_t), u) / den;
  C t1 = laguerre_t<R>(m1 - 2, C(delta_t + R(1)), u) / den;
  R wr2 = omega * r * r;
  return -R(2 * m1) * omega - omega * wr2 * t1 +
         omega * (wr2 + R(2) * (delta_t - R(1))) * t2 + R(2) * omega * wr2 * t2 * t2;
}

} // namespace eop::detail

#endif
