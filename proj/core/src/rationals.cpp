#include <string>

#include "eop/detail/rationals_t.hpp"
#include "eop/extensions.hpp"
#include "eop/orthopoly.hpp"

namespace eop {

double radial_rational(int m1, double delta_t, double omega, double r) {
  if (!(delta_t > 0.0))
    throw DomainError("radial_rational: requires delta_t > 0, got " + std::to_string(delta_t));
  if (!(r > 0.0)) throw DomainError("radial_rational: requires r > 0");
  if (m1 < 0) throw DomainError("radial_rational: m1 must be >= 0");
  return detail::radial_rational_t<double>(m1, delta_t, omega, r).real();
}

Complex theta_rational(Form form, int m2, const DerivedParams& d, double theta) {
  if (m2 < 0) throw DomainError("theta_rational: m2 must be >= 0");
  if (m2 == 0) return Complex(0.0);
  switch (form) {
    case Form::I: {
      if (!(theta > 0.0 && theta < kPi / 2))
        throw DomainError("theta_rational(I): theta outside (0, pi/2)");
      Complex z(std::cos(2 * theta));
      Complex s2(std::sin(2 * theta) * std::sin(2 * theta));
      return 4.0 * detail::xm_rational_bracket<double>(m2, d.alpha, d.beta, z, s2);
    }
    case Form::II:
    case Form::PT2: {
      if (!(theta > 0.0 && theta < kPi))
        throw DomainError("theta_rational: theta outside (0, pi)");
      Complex z(std::cos(theta));
      Complex s2(std::sin(theta) * std::sin(theta));
      return detail::xm_rational_bracket<double>(m2, d.alpha, d.beta, z, s2);
    }
    case Form::PT1:
      if (!(theta > 0.0 && theta < kPi))
        throw DomainError("theta_rational(PT1): theta outside (0, pi)");
      return detail::eckart_rational_u<double>(m2, d.A, d.B, theta);
  }
  throw DomainError("theta_rational: unknown form");
}

Complex phi_rational(Form form, int m3, const DerivedParams& d, int p, double phi) {
  if (m3 < 0) throw DomainError("phi_rational: m3 must be >= 0");
  if (p < 1) throw DomainError("phi_rational: p must be >= 1");
  if (form != Form::I && p % 2 == 0)
    throw ParityError("phi_rational: forms II/PT1/PT2 require odd p");
  if (m3 == 0) return Complex(0.0);
  const double u = p * phi;
  const double pp = double(p) * double(p);
  switch (form) {
    case Form::I: {
      if (!(u > 0.0 && u < kPi / 2))
        throw DomainError("phi_rational(I): p*phi outside (0, pi/2)");
      Complex z(std::cos(2 * u));
      Complex s2(std::sin(2 * u) * std::sin(2 * u));
      return 4.0 * pp * detail::xm_rational_bracket<double>(m3, d.alpha_t, d.beta_t, z, s2);
    }
    case Form::II:
    case Form::PT1: {
      if (!(u > 0.0 && u < kPi))
        throw DomainError("phi_rational: p*phi outside (0, pi)");
      Complex z(std::cos(u));
      Complex s2(std::sin(u) * std::sin(u));
      return pp * detail::xm_rational_bracket<double>(m3, d.alpha_t, d.beta_t, z, s2);
    }
    case Form::PT2: {
      if (!(u > 0.0 && u < kPi))
        throw DomainError("phi_rational(PT2): p*phi outside (0, pi)");
      // Eckart data of the u = p*phi problem is (A/p, B/p)
      Complex Ap = d.A_phi / double(p);
      Complex Bp = d.B_phi / double(p);
      return pp * detail::eckart_rational_u<double>(m3, Ap, Bp, u);
    }
  }
  throw DomainError("phi_rational: unknown form");
}

} // namespace eop
