#ifndef EOP_ASSEMBLY_HPP
#define EOP_ASSEMBLY_HPP

#include <optional>

#include "eop/sectors.hpp"

namespace eop {

/// Full separated bound state. 3D: psi = R(r)/r * Theta(theta)/sqrt(sin theta)
/// * Phi(phi); 2D: psi = R(r)/sqrt(r) * Phi(phi).
struct FullSolution {
  Dimension dim = Dimension::Three;
  double E = 0.0;
  int n1 = 0, n2 = 0, n3 = 0; // ordinal quantum numbers (n2 unused in 2D)
  SectorSolution radial, phi;
  std::optional<SectorSolution> theta;

  Complex psi(double r, double th, double ph) const; // 3D
  Complex psi(double r, double ph) const;            // 2D
};

FullSolution solve_3d(const PotentialSpec& spec, int n1, int n2, int n3);
FullSolution solve_2d(const PotentialSpec& spec, int n1, int n3);

/// Full potential evaluator. The rational theta/radial terms depend on the
/// chain values m^2 and l^2; they are frozen at the reference quantum numbers
/// (ref_n2, ref_n3) (default: the ground family).
class Potential3D {
public:
  Potential3D(const PotentialSpec& spec, int ref_n2 = 0, int ref_n3 = 0);
  Complex operator()(double r, double theta, double phi) const;
  const SectorProblem& radial_problem() const { return rad_; }
  const SectorProblem& theta_problem() const { return theta_; }
  const SectorProblem& phi_problem() const { return phi_; }

private:
  SectorProblem rad_, theta_, phi_;
};

class Potential2D {
public:
  Potential2D(const PotentialSpec& spec, int ref_n3 = 0);
  Complex operator()(double r, double phi) const;
  const SectorProblem& radial_problem() const { return rad_; }
  const SectorProblem& phi_problem() const { return phi_; }

private:
  SectorProblem rad_, phi_;
};

} // namespace eop

#endif
