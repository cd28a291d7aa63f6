#include "eop/orthopoly.hpp"

#include <cstdlib>

#include "eop/errors.hpp"

namespace eop {

namespace {

void check_finite(Complex v, const char* who) {
  if (!is_finite(v)) throw DomainError(std::string(who) + ": non-finite argument");
}

// Degenerate-recurrence guard: the Jacobi recurrence divides by
// 2k(k+a+b)(2k+a+b-2), which can vanish for non-classical parameters.
bool jacobi_recurrence_safe(int n, Complex a, Complex b) {
  for (int k = 2; k <= n; ++k) {
    if (abs1(Complex(double(k)) + a + b) < 1e-9) return false;
    if (abs1(Complex(double(2 * k - 2)) + a + b) < 1e-9) return false;
  }
  return true;
}

} // namespace

Complex binom(Complex c, int k) {
  Complex r(1.0);
  for (int j = 1; j <= k; ++j) r *= (c - Complex(double(k - j))) / double(j);
  return r;
}

Complex laguerre_eval(int n, Complex a, Complex x) {
  if (n < 0) return Complex(0.0);
  check_finite(a, "laguerre_eval");
  check_finite(x, "laguerre_eval");
  if (n == 0) return Complex(1.0);
  Complex pm1(1.0);
  Complex p = Complex(1.0) + a - x;
  for (int k = 2; k <= n; ++k) {
    Complex next = ((Complex(double(2 * k - 1)) + a - x) * p -
                    (Complex(double(k - 1)) + a) * pm1) /
                   double(k);
    pm1 = p;
    p = next;
  }
  return p;
}

Complex jacobi_eval(int n, Complex a, Complex b, Complex z) {
  if (n < 0) return Complex(0.0);
  check_finite(a, "jacobi_eval");
  check_finite(b, "jacobi_eval");
  check_finite(z, "jacobi_eval");
  if (n == 0) return Complex(1.0);
  if (!jacobi_recurrence_safe(n, a, b)) {
    // series form survives the parameter degeneracies of the recurrence
    Complex acc(0.0);
    Complex zm = (z - 1.0) / 2.0, zp = (z + 1.0) / 2.0;
    for (int s = 0; s <= n; ++s) {
      Complex t = binom(Complex(double(n)) + a, n - s) * binom(Complex(double(n)) + b, s);
      Complex pw(1.0);
      for (int j = 0; j < s; ++j) pw *= zm;
      for (int j = 0; j < n - s; ++j) pw *= zp;
      acc += t * pw;
    }
    return acc;
  }
  Complex pm1(1.0);
  Complex p = (a - b) / 2.0 + (a + b + 2.0) / 2.0 * z;
  for (int k = 2; k <= n; ++k) {
    Complex s = Complex(double(2 * k)) + a + b;
    Complex c1 = 2.0 * double(k) * (Complex(double(k)) + a + b) * (s - 2.0);
    Complex c2 = (s - 1.0) * (s * (s - 2.0) * z + a * a - b * b);
    Complex c3 = 2.0 * (Complex(double(k - 1)) + a) * (Complex(double(k - 1)) + b) * s;
    Complex next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

Complex laguerre_derivative(int n, Complex a, Complex x) {
  if (n <= 0) return Complex(0.0);
  return -laguerre_eval(n - 1, a + 1.0, x);
}

Complex jacobi_derivative(int n, Complex a, Complex b, Complex z) {
  if (n <= 0) return Complex(0.0);
  return 0.5 * (Complex(double(n)) + a + b + 1.0) * jacobi_eval(n - 1, a + 1.0, b + 1.0, z);
}

Complex jacobi_derivative_k(int n, Complex a, Complex b, Complex z, int order) {
  if (order < 0) throw DomainError("jacobi_derivative_k: negative order");
  if (n - order < 0) return Complex(0.0);
  Complex c(1.0);
  for (int j = 0; j < order; ++j) c *= 0.5 * (Complex(double(n)) + a + b + 1.0 + double(j));
  return c * jacobi_eval(n - order, a + double(order), b + double(order), z);
}

CoeffPoly laguerre_coefficients(int n, Complex a) {
  if (n < 0) return CoeffPoly::zero();
  check_finite(a, "laguerre_coefficients");
  // k L_k = (2k-1+a) L_{k-1} - x L_{k-1} - (k-1+a) L_{k-2}
  CoeffPoly pm1 = CoeffPoly::one();
  if (n == 0) return pm1;
  CoeffPoly p({Complex(1.0) + a, Complex(-1.0)});
  const CoeffPoly x({Complex(0.0), Complex(1.0)});
  for (int k = 2; k <= n; ++k) {
    CoeffPoly next = (1.0 / double(k)) *
                     (((Complex(double(2 * k - 1)) + a) * p) - (x * p) -
                      ((Complex(double(k - 1)) + a) * pm1));
    pm1 = p;
    p = next;
  }
  return p;
}

CoeffPoly jacobi_coefficients(int n, Complex a, Complex b) {
  if (n < 0) return CoeffPoly::zero();
  check_finite(a, "jacobi_coefficients");
  check_finite(b, "jacobi_coefficients");
  if (n == 0) return CoeffPoly::one();
  if (!jacobi_recurrence_safe(n, a, b)) {
    // assemble from the series in ((z-1)/2, (z+1)/2) powers
    CoeffPoly acc = CoeffPoly::zero();
    const CoeffPoly zm({Complex(-0.5), Complex(0.5)});
    const CoeffPoly zp({Complex(0.5), Complex(0.5)});
    for (int s = 0; s <= n; ++s) {
      CoeffPoly t = CoeffPoly::one();
      for (int j = 0; j < s; ++j) t = t * zm;
      for (int j = 0; j < n - s; ++j) t = t * zp;
      acc = acc + (binom(Complex(double(n)) + a, n - s) * binom(Complex(double(n)) + b, s)) * t;
    }
    return acc;
  }
  CoeffPoly pm1 = CoeffPoly::one();
  CoeffPoly p({(a - b) / 2.0, (a + b + 2.0) / 2.0});
  const CoeffPoly z({Complex(0.0), Complex(1.0)});
  for (int k = 2; k <= n; ++k) {
    Complex s = Complex(double(2 * k)) + a + b;
    Complex c1 = 2.0 * double(k) * (Complex(double(k)) + a + b) * (s - 2.0);
    Complex c2a = s * (s - 2.0);
    Complex c2b = a * a - b * b;
    Complex c3 = 2.0 * (Complex(double(k - 1)) + a) * (Complex(double(k - 1)) + b) * s;
    CoeffPoly next = (1.0 / c1) * (((s - 1.0) * c2a) * (z * p) + ((s - 1.0) * c2b) * p - c3 * pm1);
    pm1 = p;
    p = next;
  }
  return p;
}

CoeffPoly poly_coefficients(PolyKind kind, int n, Complex a, Complex b) {
  return kind == PolyKind::Laguerre ? laguerre_coefficients(n, a)
                                    : jacobi_coefficients(n, a, b);
}

} // namespace eop
