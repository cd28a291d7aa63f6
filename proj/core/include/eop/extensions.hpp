#ifndef EOP_EXTENSIONS_HPP
#define EOP_EXTENSIONS_HPP

#include "eop/coeffpoly.hpp"
#include "eop/params.hpp"
#include "eop/scalar.hpp"
#include "eop/variants.hpp"

namespace eop {

/// Rational part of the extended radial oscillator. Vanishes identically at
/// m1 = 0 under the negative-index convention. Throws DomainError if the
/// delta_t > 0 precondition is violated.
double radial_rational(int m1, double delta_t, double omega, double r);

/// Rational part of the extended theta potential for the given form.
/// Uses d.alpha/d.beta (forms I, II, PT2) or d.A/d.B (form PT1).
Complex theta_rational(Form form, int m2, const DerivedParams& d, double theta);

/// Rational part of the extended phi potential. Forms II/PT1/PT2 require odd p.
Complex phi_rational(Form form, int m3, const DerivedParams& d, int p, double phi);

/// phi sector eigenvalue m^2 for quantum number n3 (paper index).
Complex eigen_msq(Form form, int n3, int p, const DerivedParams& d);

/// theta sector eigenvalue l^2 for quantum number n2 (paper index).
Complex eigen_ellsq(Form form, int n2, const DerivedParams& d);

/// Radial eigenvalue E = omega (2 n1 + 1 + delta_t).
double eigen_E(int n1, double omega, double delta_t);

/// New polynomial y^{(A,B)}_{nu,m2}(z), nu = n2+m2-1, of the Eckart-type
/// sectors, expressed through classical Jacobi polynomials. Identically zero
/// when n2 == m2 (the corresponding bound state does not exist).
CoeffPoly y_polynomial(int n2, int m2, Complex A, Complex B);

} // namespace eop

#endif
