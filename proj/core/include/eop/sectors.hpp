#ifndef EOP_SECTORS_HPP
#define EOP_SECTORS_HPP

#include <functional>

#include "eop/coeffpoly.hpp"
#include "eop/extensions.hpp"
#include "eop/params.hpp"
#include "eop/variants.hpp"

namespace eop {

/// One fully-specified separated 1D Schroedinger problem
///   -psi'' + V_eff(x) psi = lambda psi   on the open interval (x_lo, x_hi),
/// with lambda = m^2 (phi), l^2 (theta) or E (radial).
struct SectorProblem {
  Sector sector = Sector::Phi;
  Form form = Form::I;
  Dimension dim = Dimension::Three;
  int m = 0; // extension index m1/m2/m3
  int p = 1; // phi frequency

  double omega = 1.0, delta = 0.0; // radial data
  double C = 0, D = 0, G = 0, F = 0;
  DerivedParams derived; // derived parameters incl. chain inputs msq/delta_t

  double x_lo = 0.0, x_hi = 0.0; // x_hi is +infinity for the radial sector

  bool eckart() const { return is_eckart_sector(sector, form, dim); }
  bool real_potential() const;

  /// Extended potential as it appears in the full (r,theta,phi) potential,
  /// i.e. without the separation-induced centrifugal additions.
  Complex bare_potential(double x) const;

  /// Potential of the 1D eigenproblem (bare + centrifugal terms).
  Complex effective_potential(double x) const;
  std::complex<long double> effective_potential_ld(long double x) const;

  /// Sector eigenvalue at the paper's quantum-number index. For Eckart-type
  /// sectors the index k == m does not label a bound state (DegenerateError).
  Complex eigenvalue_paper(int k) const;

  /// Ordinal (n-th bound state) -> paper index. Eckart sectors skip k = m.
  int paper_index(int ordinal) const;
  Complex eigenvalue(int ordinal) const;

  /// Seed/denominator polynomial D(z) of the extension.
  CoeffPoly seed_denominator() const;
};

SectorProblem make_phi_problem(const PotentialSpec& spec);
SectorProblem make_theta_problem(const PotentialSpec& spec, Complex msq);
/// lam_angular is l^2 (3D) or m^2 (2D); throws InadmissibleError if
/// delta + lam <= 0 or lam has a non-negligible imaginary part.
SectorProblem make_radial_problem(const PotentialSpec& spec, Complex lam_angular);

/// Denominator nodelessness scan (1e4 points + endpoint behavior) and derived
/// parameter reality checks. Throws SingularDenominatorError/InadmissibleError.
void check_admissible(const SectorProblem& prob);

/// Truncation radius for radial quadrature/discretization covering states up
/// to ordinal kmax: 12 sqrt(2(delta_t + 2 kmax + 2 m)/omega).
double radial_box(const SectorProblem& prob, int kmax);

/// Polynomial part of the closed-form eigenfunction at paper index k,
/// constructed by the method of undetermined coefficients: collocate the
/// sector ODE, extract the (verified one-dimensional) nullspace, scale the
/// leading coefficient to 1. Degree n+m for the EOP sectors, n+m-1 for the
/// Eckart-type sectors.  Throws RankError if the nullspace is not 1D.
CoeffPoly exceptional_poly_from_ode(const SectorProblem& prob, int k);

/// One separated 1D bound state with its unit-L2 closed-form evaluator.
struct SectorSolution {
  Sector sector = Sector::Phi;
  Form form = Form::I;
  Dimension dim = Dimension::Three;
  int quantum_number = 0; // ordinal
  int paper_index = 0;
  int m = 0;
  Complex eigenvalue{};
  double x_lo = 0, x_hi = 0;
  CoeffPoly numerator, denominator;
  std::function<Complex(double)> eval;
  std::function<std::complex<long double>(long double)> eval_ld;
};

/// n-th bound state of the sector problem (Eckart sectors use the y-polynomial
/// construction; EOP sectors use exceptional_poly_from_ode).
SectorSolution sector_solution(const SectorProblem& prob, int ordinal);

/// Convenience wrapper resolving the chain at reference quantum numbers 0.
SectorSolution sector_solution(Sector sector, Form form, const PotentialSpec& spec,
                               int ordinal);

} // namespace eop

#endif
