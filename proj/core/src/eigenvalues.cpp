#include <string>

#include "eop/errors.hpp"
#include "eop/extensions.hpp"
#include "eop/orthopoly.hpp"

namespace eop {

namespace {

Complex sq(Complex v) { return v * v; }

Complex eckart_level(Complex A, Complex B, int k) {
  Complex d = A - 1.0 + double(k);
  if (abs1(d) < 1e-12)
    throw DegenerateError("eckart eigenvalue: A-1+n vanishes at n=" + std::to_string(k));
  return d * d + B * B / (d * d);
}

} // namespace

Complex eigen_msq(Form form, int n3, int p, const DerivedParams& d) {
  if (n3 < 0) throw DomainError("eigen_msq: n3 must be >= 0");
  const double pp = double(p) * double(p);
  switch (form) {
    case Form::I:
      return pp * sq(2.0 * n3 + d.alpha_t + d.beta_t + 1.0);
    case Form::II:
      return pp * sq(double(n3) + (d.alpha_t + d.beta_t + 1.0) / 2.0);
    case Form::PT1:
      // equals p^2 (n3 + (alpha_t+beta_t+1)/2)^2 with A = p(alpha_t+beta_t+1)/2
      return sq(double(n3 * p) + d.A_phi);
    case Form::PT2:
      return pp * eckart_level(d.A_phi / double(p), d.B_phi / double(p), n3);
  }
  throw DomainError("eigen_msq: unknown form");
}

Complex eigen_ellsq(Form form, int n2, const DerivedParams& d) {
  if (n2 < 0) throw DomainError("eigen_ellsq: n2 must be >= 0");
  switch (form) {
    case Form::I:
      return sq(2.0 * n2 + d.alpha + d.beta + 1.0);
    case Form::II:
    case Form::PT2:
      // for PT2 this equals (n2 + A)^2
      return sq(double(n2) + (d.alpha + d.beta + 1.0) / 2.0);
    case Form::PT1:
      return eckart_level(d.A, d.B, n2);
  }
  throw DomainError("eigen_ellsq: unknown form");
}

double eigen_E(int n1, double omega, double delta_t) {
  if (n1 < 0) throw DomainError("eigen_E: n1 must be >= 0");
  if (!(delta_t > 0.0)) throw DomainError("eigen_E: requires delta_t > 0");
  return omega * (2.0 * n1 + 1.0 + delta_t);
}

CoeffPoly y_polynomial(int n2, int m2, Complex A, Complex B) {
  if (n2 < 0) throw DomainError("y_polynomial: n2 must be >= 0");
  if (m2 < 1) throw DomainError("y_polynomial: m2 must be >= 1");
  Complex an = eckart_alpha_n(A, B, n2);
  Complex bn = eckart_beta_n(A, B, n2);
  Complex am = eckart_alpha_n(A, B, m2);
  Complex bm = eckart_beta_n(A, B, m2);
  Complex den_n = 2.0 * n2 + an + bn; // = -2(A-1)
  Complex den_m = 2.0 * m2 + am + bm;
  if (abs1(den_n) < 1e-12 || abs1(den_m) < 1e-12)
    throw DegenerateError("y_polynomial: 2n+alpha_n+beta_n vanishes (A=1)");
  Complex c1 = 2.0 * (double(n2) + an) * (double(n2) + bn) / den_n;
  Complex c2 = 2.0 * (double(m2) + am) * (double(m2) + bm) / den_m;
  CoeffPoly q_m = jacobi_coefficients(m2, am, bm);
  // q^{(A+1,B)}_{m2-1}: Eckart exponents with A -> A+1 at index m2-1
  CoeffPoly q_shift = m2 == 1 ? CoeffPoly::one()
                              : jacobi_coefficients(m2 - 1, eckart_alpha_n(A + 1.0, B, m2 - 1),
                                                    eckart_beta_n(A + 1.0, B, m2 - 1));
  CoeffPoly y = c1 * (q_m * jacobi_coefficients(n2 - 1, an, bn)) -
                c2 * (q_shift * jacobi_coefficients(n2, an, bn));
  return y.trim(1e-14);
}

} // namespace eop
