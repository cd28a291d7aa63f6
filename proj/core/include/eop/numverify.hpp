#ifndef EOP_NUMVERIFY_HPP
#define EOP_NUMVERIFY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "eop/scalar.hpp"
#include "eop/sectors.hpp"

namespace eop {

/// Uniform grid with Dirichlet endpoints a and b and N interior nodes,
/// h = (b-a)/(N+1), node(i) = a + i h for i = 1..N.
struct Grid1D {
  double a = 0.0, b = 1.0;
  int N = 32;
  double h() const { return (b - a) / (N + 1); }
  double node(int i) const { return a + h() * i; }
};

/// Discretized (-d^2/dx^2 + V) with central 3-point differences and Dirichlet
/// ends: complex symmetric tridiagonal with constant off-diagonal -1/h^2.
struct TridiagOperator {
  std::vector<Complex> diag;
  double off = 0.0;
  Grid1D grid;
  bool real_symmetric = false;
  std::vector<Complex> to_dense() const;
};

TridiagOperator build_hamiltonian(const std::function<Complex(double)>& V, Grid1D grid);

/// Numerically computed eigenvalues. `eigenvalues` are Richardson-extrapolated
/// from the (N, 2N) grid pair; the raw per-grid values are kept alongside and
/// richardson_error = |lam_2N - lam_N| / 3 is reported per eigenvalue.
struct GridSpectrum {
  std::vector<Complex> eigenvalues;
  std::vector<double> richardson_error;
  std::vector<Complex> values_coarse; // grid N
  std::vector<Complex> values_fine;   // grid 2N
  Grid1D grid;
};

/// k smallest-real-part eigenvalues (k <= 8). Real-symmetric operators go
/// through the tridiagonal QL path; complex ones through a dense
/// Hessenberg-QR scan on a coarse grid refined by shift-invert Rayleigh
/// iteration on the stated grids.
GridSpectrum numeric_spectrum(const std::function<Complex(double)>& V, Grid1D grid, int k);

/// Relative Schroedinger residual ||-psi'' + V psi - lambda psi||_2 / ||psi||_2
/// over the interior 90% of the window, 5-point stencils in extended
/// precision, step chosen by a Richardson agreement check. lambda defaults to
/// the solution's eigenvalue; window defaults to the sector domain (radial:
/// [0, radial_box]).
double residual_norm(const SectorSolution& sol, const SectorProblem& prob,
                     std::optional<Complex> lambda = std::nullopt);

/// Gauss-Legendre quadrature (200 nodes) of f * g * weight over [a, b].
/// No conjugation: callers pass conjugated inputs for Hermitian products.
Complex inner_product(const std::function<Complex(double)>& f,
                      const std::function<Complex(double)>& g,
                      const std::function<Complex(double)>& weight, double a, double b);

/// Sign changes of a real eigenfunction sampled on the interior of its domain.
int count_sign_changes(const SectorSolution& sol, int samples = 2000);

/// Oracle discretization window for a sector problem (insets per module
/// contract: radial [1e-4, radial_box], angular 1e-5 off the endpoints).
Grid1D oracle_grid(const SectorProblem& prob, int N, int kmax);

} // namespace eop

#endif
