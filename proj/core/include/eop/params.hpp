#ifndef EOP_PARAMS_HPP
#define EOP_PARAMS_HPP

#include "eop/scalar.hpp"
#include "eop/variants.hpp"

namespace eop {

/// The ten-parameter family: six continuous (omega, delta, C, D, G, F), four
/// discrete (p, m1, m2, m3), plus the variant tags.
struct PotentialSpec {
  double omega = 1.0;  // oscillator strength, > 0
  double delta = 0.3;  // radial 1/r^2 strength, >= 0
  double C = 2.0;      // theta cosec^2 strength
  double D = 1.2;      // theta partner strength (sec^2 / cosec cot / i cot)
  double G = 1.5;      // phi cosec^2(p phi) strength
  double F = 0.9;      // phi partner strength
  int p = 1;           // phi frequency, >= 1 (odd for phi forms II/PT1/PT2)
  int m1 = 0, m2 = 0, m3 = 0; // extension indices, >= 0

  VariantId variant;   // theta_form/phi_form/dimension

  void validate() const; // throws DomainError / ParityError
};

/// Derived sector parameters. Only the fields relevant to the chosen forms are
/// populated; the chain values (msq, ellsq, delta_t) are filled as the phi ->
/// theta -> r cascade is evaluated.
struct DerivedParams {
  // theta sector (forms I/II/PT2)
  Complex alpha{}, beta{};
  // phi sector (forms I/II/PT1)
  Complex alpha_t{}, beta_t{};
  // Eckart parametrizations: theta PT1 (A,B); phi PT1 / 2D PT2 (A_phi, B_phi)
  Complex A{}, B{};
  Complex A_phi{}, B_phi{};
  // chain values
  Complex msq{};   // phi eigenvalue m^2 feeding the theta sector
  Complex ellsq{}; // theta eigenvalue l^2 feeding the radial sector
  double delta_t = 0.0; // sqrt(delta + l^2) (3D) or sqrt(delta + m^2) (2D)
};

/// n-dependent exponents of the Eckart-type sectors:
/// alpha_n = -(A-1+n) + B/(A-1+n), beta_n = -(A-1+n) - B/(A-1+n).
Complex eckart_alpha_n(Complex A, Complex B, int n);
Complex eckart_beta_n(Complex A, Complex B, int n);

/// Table I parameter maps (slot convention: alpha multiplies the (1-z) edge).
/// Requires msq from the phi sector. Throws InadmissibleError when a real form
/// yields a non-real alpha/beta.
DerivedParams derive_theta_params(Form form, double C, double D, Complex msq);

/// Table II / 2D parameter maps. Throws ParityError for even p on forms
/// II/PT1/PT2 and InadmissibleError for non-real results of real forms.
DerivedParams derive_phi_params(Form form, double G, double F, int p,
                                Dimension dim = Dimension::Three);

} // namespace eop

#endif
