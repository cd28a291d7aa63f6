#include "eop/params.hpp"

#include <cmath>
#include <string>

#include "eop/errors.hpp"

namespace eop {

namespace {

constexpr double kRealTol = 1e-10;

void require_real(Complex v, const char* who) {
  if (std::abs(v.imag()) > kRealTol * (1.0 + std::abs(v.real())))
    throw InadmissibleError(std::string(who) +
                            ": derived parameter acquired an imaginary part");
}

void require_odd_p(int p, const char* who) {
  if (p % 2 == 0) throw ParityError(std::string(who) + ": p must be odd, got p=" +
                                    std::to_string(p));
}

} // namespace

void PotentialSpec::validate() const {
  if (!(omega > 0.0)) throw DomainError("PotentialSpec: omega must be > 0");
  if (!(delta >= 0.0)) throw DomainError("PotentialSpec: delta must be >= 0");
  if (p < 1) throw DomainError("PotentialSpec: p must be >= 1");
  if (m1 < 0 || m2 < 0 || m3 < 0)
    throw DomainError("PotentialSpec: extension indices must be >= 0");
  if (!valid_phi_form(variant.phi_form, variant.dim))
    throw DomainError("PotentialSpec: phi form PT2 exists only in 2D");
  if (variant.phi_form != Form::I) require_odd_p(p, "PotentialSpec");
  for (double v : {omega, delta, C, D, G, F})
    if (!is_finite(v)) throw DomainError("PotentialSpec: non-finite parameter");
}

Complex eckart_alpha_n(Complex A, Complex B, int n) {
  Complex d = A - 1.0 + double(n);
  if (abs1(d) < 1e-12)
    throw DegenerateError("eckart exponents: A-1+n vanishes at n=" + std::to_string(n));
  return -d + B / d;
}

Complex eckart_beta_n(Complex A, Complex B, int n) {
  Complex d = A - 1.0 + double(n);
  if (abs1(d) < 1e-12)
    throw DegenerateError("eckart exponents: A-1+n vanishes at n=" + std::to_string(n));
  return -d - B / d;
}

DerivedParams derive_theta_params(Form form, double C, double D, Complex msq) {
  DerivedParams d;
  d.msq = msq;
  Complex s = Complex(C) + msq;
  switch (form) {
    case Form::I:
      d.alpha = std::sqrt(s);
      d.beta = 0.5 * std::sqrt(Complex(1.0 + 4.0 * D));
      require_real(d.alpha, "derive_theta_params(I)");
      require_real(d.beta, "derive_theta_params(I)");
      break;
    case Form::II:
      // alpha sits on the (1-z) edge and carries +D
      d.alpha = std::sqrt(s + D);
      d.beta = std::sqrt(s - D);
      require_real(d.alpha, "derive_theta_params(II)");
      require_real(d.beta, "derive_theta_params(II)");
      break;
    case Form::PT1:
      d.A = 0.5 + std::sqrt(s);
      d.B = Complex(D / 2.0);
      break;
    case Form::PT2:
      d.alpha = std::sqrt(s + Complex(0.0, D));
      d.beta = std::sqrt(s - Complex(0.0, D));
      // (A - 1/2)^2 - B^2 = C + m^2 and (2A-1)B = D hold for this pair
      d.A = (d.alpha + d.beta + 1.0) / 2.0;
      d.B = (d.alpha - d.beta) / Complex(0.0, 2.0);
      break;
  }
  return d;
}

DerivedParams derive_phi_params(Form form, double G, double F, int p, Dimension dim) {
  if (p < 1) throw DomainError("derive_phi_params: p must be >= 1");
  DerivedParams d;
  double p2 = double(p) * double(p);
  switch (form) {
    case Form::I:
      d.alpha_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * G / p2));
      d.beta_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * F / p2));
      require_real(d.alpha_t, "derive_phi_params(I)");
      require_real(d.beta_t, "derive_phi_params(I)");
      break;
    case Form::II:
      require_odd_p(p, "derive_phi_params(II)");
      d.alpha_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * (G + F) / p2));
      d.beta_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * (G - F) / p2));
      require_real(d.alpha_t, "derive_phi_params(II)");
      require_real(d.beta_t, "derive_phi_params(II)");
      break;
    case Form::PT1: {
      require_odd_p(p, "derive_phi_params(PT1)");
      d.alpha_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * G / p2, 4.0 * F / p2));
      d.beta_t = 0.5 * std::sqrt(Complex(1.0 + 4.0 * G / p2, -4.0 * F / p2));
      // G = A^2 - B^2 - A p and F = B(2A - p) invert to:
      d.A_phi = double(p) * (d.alpha_t + d.beta_t + 1.0) / 2.0;
      d.B_phi = double(p) * (d.alpha_t - d.beta_t) / Complex(0.0, 2.0);
      break;
    }
    case Form::PT2: {
      if (dim != Dimension::Two)
        throw DomainError("derive_phi_params: phi form PT2 exists only in 2D");
      require_odd_p(p, "derive_phi_params(PT2)");
      // Eckart data of the u = p*phi problem: A/p = 1/2 + 1/2 sqrt(1+4G/p^2),
      // B/p = F/(2p^2)  (i.e. B = F/(2p), which reduces to F/2 at p = 1)
      d.A_phi = double(p) * (0.5 + 0.5 * std::sqrt(Complex(1.0 + 4.0 * G / p2)));
      d.B_phi = Complex(F / (2.0 * double(p)));
      require_real(d.A_phi, "derive_phi_params(PT2)");
      break;
    }
  }
  return d;
}

} // namespace eop
