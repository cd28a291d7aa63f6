#include "eop/assembly.hpp"

#include <cmath>

#include "eop/errors.hpp"

namespace eop {

Complex FullSolution::psi(double r, double th, double ph) const {
  if (dim != Dimension::Three || !theta)
    throw DomainError("FullSolution::psi(r,theta,phi): not a 3D solution");
  return radial.eval(r) / r * theta->eval(th) / std::sqrt(std::sin(th)) * phi.eval(ph);
}

Complex FullSolution::psi(double r, double ph) const {
  if (dim != Dimension::Two)
    throw DomainError("FullSolution::psi(r,phi): not a 2D solution");
  return radial.eval(r) / std::sqrt(r) * phi.eval(ph);
}

FullSolution solve_3d(const PotentialSpec& spec, int n1, int n2, int n3) {
  if (spec.variant.dim != Dimension::Three)
    throw DomainError("solve_3d: spec is not three-dimensional");
  if (n1 < 0 || n2 < 0 || n3 < 0) throw DomainError("solve_3d: quantum numbers must be >= 0");
  FullSolution fs;
  fs.dim = Dimension::Three;
  fs.n1 = n1;
  fs.n2 = n2;
  fs.n3 = n3;
  SectorProblem phi = make_phi_problem(spec);
  fs.phi = sector_solution(phi, n3);
  SectorProblem th = make_theta_problem(spec, fs.phi.eigenvalue);
  fs.theta = sector_solution(th, n2);
  SectorProblem rad = make_radial_problem(spec, fs.theta->eigenvalue);
  fs.radial = sector_solution(rad, n1);
  fs.E = fs.radial.eigenvalue.real();
  return fs;
}

FullSolution solve_2d(const PotentialSpec& spec, int n1, int n3) {
  if (spec.variant.dim != Dimension::Two)
    throw DomainError("solve_2d: spec is not two-dimensional");
  if (n1 < 0 || n3 < 0) throw DomainError("solve_2d: quantum numbers must be >= 0");
  FullSolution fs;
  fs.dim = Dimension::Two;
  fs.n1 = n1;
  fs.n3 = n3;
  SectorProblem phi = make_phi_problem(spec);
  fs.phi = sector_solution(phi, n3);
  SectorProblem rad = make_radial_problem(spec, fs.phi.eigenvalue);
  fs.radial = sector_solution(rad, n1);
  fs.E = fs.radial.eigenvalue.real();
  return fs;
}

Potential3D::Potential3D(const PotentialSpec& spec, int ref_n2, int ref_n3) {
  if (spec.variant.dim != Dimension::Three)
    throw DomainError("Potential3D: spec is not three-dimensional");
  phi_ = make_phi_problem(spec);
  theta_ = make_theta_problem(spec, phi_.eigenvalue(ref_n3));
  rad_ = make_radial_problem(spec, theta_.eigenvalue(ref_n2));
}

Complex Potential3D::operator()(double r, double theta, double phi) const {
  double s = std::sin(theta);
  return rad_.bare_potential(r) + theta_.bare_potential(theta) / (r * r) +
         phi_.bare_potential(phi) / (r * r * s * s);
}

Potential2D::Potential2D(const PotentialSpec& spec, int ref_n3) {
  if (spec.variant.dim != Dimension::Two)
    throw DomainError("Potential2D: spec is not two-dimensional");
  phi_ = make_phi_problem(spec);
  rad_ = make_radial_problem(spec, phi_.eigenvalue(ref_n3));
}

Complex Potential2D::operator()(double r, double phi) const {
  return rad_.bare_potential(r) + phi_.bare_potential(phi) / (r * r);
}

} // namespace eop
