#ifndef EOP_LINALG_HPP
#define EOP_LINALG_HPP

#include <vector>

#include "eop/scalar.hpp"

namespace eop::linalg {

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// All eigenvalues of a real symmetric tridiagonal matrix, ascending.
/// d = diagonal (size n), e = subdiagonal (size n-1). Implicit-shift QL.
std::vector<double> symtridiag_eigenvalues(std::vector<double> d, std::vector<double> e);

/// Eigenvalues of a dense complex matrix (Householder Hessenberg reduction +
/// Wilkinson-shifted QR with deflation). Throws ConvergenceError past the
/// sweep cap. Row-major storage.
std::vector<Complex> dense_eigenvalues(std::vector<Complex> a, int n, int sweep_cap = 500);

/// One-sided complex Jacobi SVD. Returns singular values descending and the
/// matching right singular vectors as columns of v (cols x cols, row-major).
struct Svd {
  std::vector<double> sigma;
  std::vector<Complex> v;
  int cols = 0;
  Complex v_entry(int row, int col) const { return v[row * cols + col]; }
};
Svd svd_jacobi(std::vector<Complex> m, int rows, int cols);

/// Rayleigh-quotient inverse iteration on a complex symmetric tridiagonal
/// (constant real off-diagonal). Refines `shift` to an eigenvalue; sets
/// *converged accordingly.
Complex tridiag_rqi(const std::vector<Complex>& diag, double off, Complex shift,
                    int max_iter, double tol, bool* converged);

} // namespace eop::linalg

#endif
