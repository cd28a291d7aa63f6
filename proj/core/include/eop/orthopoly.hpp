#ifndef EOP_ORTHOPOLY_HPP
#define EOP_ORTHOPOLY_HPP

#include "eop/coeffpoly.hpp"
#include "eop/scalar.hpp"

namespace eop {

/// Classical orthogonal polynomials with complex parameters and arguments.
///
/// Conventions:
///  * three-term recurrences in the hot path; the explicit series is used
///    only when a recurrence coefficient degenerates,
///  * negative index is the zero polynomial: L_{-k} = P_{-k} = 0 (k > 0).

/// Generalized Laguerre L^(a)_n(x).
Complex laguerre_eval(int n, Complex a, Complex x);

/// Jacobi P^(a,b)_n(z).
Complex jacobi_eval(int n, Complex a, Complex b, Complex z);

/// d/dx L^(a)_n(x) = -L^(a+1)_{n-1}(x).
Complex laguerre_derivative(int n, Complex a, Complex x);

/// d/dz P^(a,b)_n(z) = (n+a+b+1)/2 P^(a+1,b+1)_{n-1}(z).
Complex jacobi_derivative(int n, Complex a, Complex b, Complex z);

/// Repeated parameter-shift derivative, order >= 0.
Complex jacobi_derivative_k(int n, Complex a, Complex b, Complex z, int order);

enum class PolyKind { Laguerre, Jacobi };

/// Explicit coefficient vector (lowest degree first). For Laguerre `b` is ignored.
CoeffPoly poly_coefficients(PolyKind kind, int n, Complex a, Complex b = Complex(0.0));

CoeffPoly laguerre_coefficients(int n, Complex a);
CoeffPoly jacobi_coefficients(int n, Complex a, Complex b);

/// Generalized binomial coefficient binom(c, k) = c(c-1)...(c-k+1)/k!.
Complex binom(Complex c, int k);

} // namespace eop

#endif
