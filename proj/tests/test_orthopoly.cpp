#include "doctest.h"

#include <cmath>

#include "eop/coeffpoly.hpp"
#include "eop/errors.hpp"
#include "eop/linalg.hpp"
#include "eop/orthopoly.hpp"
#include "test_oracles.hpp"

using eop::CoeffPoly;
using eop::Complex;

namespace {
double rel_err(Complex got, Complex want) {
  double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}
} // namespace

TEST_CASE("laguerre pinned values") {
  CHECK(eop::laguerre_eval(0, Complex(7.3), Complex(-4.0)) == Complex(1.0));
  CHECK(rel_err(eop::laguerre_eval(1, Complex(2.0), Complex(0.5)), Complex(2.5)) < 1e-14);
  CHECK(rel_err(eop::laguerre_eval(2, Complex(1.0), Complex(-2.0)), Complex(11.0)) < 1e-14);
  CHECK(eop::laguerre_eval(-1, Complex(1.0), Complex(0.3)) == Complex(0.0));
  CHECK(eop::laguerre_eval(-3, Complex(1.0), Complex(0.3)) == Complex(0.0));
}

TEST_CASE("jacobi pinned values") {
  CHECK(eop::jacobi_eval(0, Complex(0.7), Complex(-0.2), Complex(0.9)) == Complex(1.0));
  CHECK(rel_err(eop::jacobi_eval(1, Complex(1.0), Complex(2.0), Complex(0.0)),
                Complex(-0.5)) < 1e-14);
  CHECK(rel_err(eop::jacobi_eval(2, Complex(0.0), Complex(0.0), Complex(1.0)),
                Complex(1.0)) < 1e-14);
  CHECK(eop::jacobi_eval(-2, Complex(1.0), Complex(1.0), Complex(0.5)) == Complex(0.0));
}

TEST_CASE("recurrence matches series for random complex parameters") {
  for (int trial = 0; trial < 200; ++trial) {
    int n = trial % 13;
    Complex a = oracles::random_complex(3.0);
    Complex b = oracles::random_complex(3.0);
    Complex z = oracles::random_complex(3.0);
    Complex x = oracles::random_complex(3.0);
    CHECK(rel_err(eop::jacobi_eval(n, a, b, z), oracles::jacobi_series(n, a, b, z)) < 1e-10);
    CHECK(rel_err(eop::laguerre_eval(n, a, x), oracles::laguerre_series(n, a, x)) < 1e-10);
  }
}

TEST_CASE("derivatives: pinned values and finite differences") {
  CHECK(eop::laguerre_derivative(0, Complex(2.0), Complex(1.0)) == Complex(0.0));
  CHECK(rel_err(eop::laguerre_derivative(1, Complex(3.0), Complex(2.0)), Complex(-1.0)) < 1e-14);
  CHECK(rel_err(eop::laguerre_derivative(2, Complex(1.0), Complex(-2.0)), Complex(-5.0)) < 1e-13);

  CHECK(eop::jacobi_derivative(0, Complex(1.0), Complex(2.0), Complex(0.3)) == Complex(0.0));
  CHECK(rel_err(eop::jacobi_derivative(1, Complex(1.0), Complex(2.0), Complex(-0.7)),
                Complex(2.5)) < 1e-14);

  // 50 random points against central differences, h = 1e-6, absolute 1e-6
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 10;
    Complex a(oracles::uniform(-0.9, 3.0), 0.0);
    Complex b(oracles::uniform(-0.9, 3.0), 0.0);
    double z = oracles::uniform(-0.9, 0.9);
    Complex fd = oracles::central_diff(
        [&](double t) { return oracles::jacobi_series(n, a, b, Complex(t)); }, z);
    CHECK(std::abs(eop::jacobi_derivative(n, a, b, Complex(z)) - fd) < 1e-6);
    double x = oracles::uniform(0.1, 3.0);
    Complex fdl = oracles::central_diff(
        [&](double t) { return oracles::laguerre_series(n, a, Complex(t)); }, x);
    CHECK(std::abs(eop::laguerre_derivative(n, a, Complex(x)) - fdl) < 1e-6);
  }

  // spec-pinned finite-difference case
  Complex fd3 = oracles::central_diff(
      [&](double t) {
        return oracles::jacobi_series(3, Complex(0.5), Complex(-0.25), Complex(t));
      },
      0.3);
  CHECK(std::abs(eop::jacobi_derivative(3, Complex(0.5), Complex(-0.25), Complex(0.3)) - fd3) <
        1e-6);
}

TEST_CASE("coefficient extraction") {
  CoeffPoly l0 = eop::poly_coefficients(eop::PolyKind::Laguerre, 0, Complex(2.2));
  REQUIRE(l0.degree() == 0);
  CHECK(l0.coeffs()[0] == Complex(1.0));

  CoeffPoly j1 = eop::poly_coefficients(eop::PolyKind::Jacobi, 1, Complex(1.0), Complex(2.0));
  REQUIRE(j1.degree() == 1);
  CHECK(rel_err(j1.coeffs()[0], Complex(-0.5)) < 1e-14);
  CHECK(rel_err(j1.coeffs()[1], Complex(2.5)) < 1e-14);

  CoeffPoly l2 = eop::poly_coefficients(eop::PolyKind::Laguerre, 2, Complex(1.0));
  REQUIRE(l2.degree() == 2);
  CHECK(rel_err(l2.coeffs()[0], Complex(3.0)) < 1e-14);
  CHECK(rel_err(l2.coeffs()[1], Complex(-3.0)) < 1e-14);
  CHECK(rel_err(l2.coeffs()[2], Complex(0.5)) < 1e-14);

  // Horner evaluation of the coefficient vectors agrees with direct evaluation
  for (int trial = 0; trial < 20; ++trial) {
    int n = trial % 9;
    Complex a = oracles::random_complex(2.0);
    Complex b = oracles::random_complex(2.0);
    Complex z = oracles::random_complex(1.5);
    CHECK(rel_err(eop::jacobi_coefficients(n, a, b).eval(z), eop::jacobi_eval(n, a, b, z)) <
          1e-10);
    CHECK(rel_err(eop::laguerre_coefficients(n, a).eval(z), eop::laguerre_eval(n, a, z)) <
          1e-10);
  }
}

TEST_CASE("coeffpoly: horner equals term-by-term summation") {
  for (int trial = 0; trial < 50; ++trial) {
    int deg = 1 + trial % 8;
    std::vector<Complex> c;
    for (int i = 0; i <= deg; ++i) c.push_back(oracles::random_complex(2.0));
    CoeffPoly p(c);
    Complex z = oracles::random_complex(2.0);
    Complex direct(0.0);
    Complex zp(1.0);
    for (int i = 0; i <= deg; ++i) {
      direct += c[i] * zp;
      zp *= z;
    }
    CHECK(rel_err(p.eval(z), direct) < 1e-12);
  }
}

TEST_CASE("conjugation symmetry of jacobi with conjugate parameter pairs") {
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 6;
    Complex a = oracles::random_complex(2.0);
    double z = oracles::uniform(-0.9, 0.9);
    Complex v = eop::jacobi_eval(n, a, std::conj(a), Complex(z));
    Complex w = eop::jacobi_eval(n, std::conj(a), a, Complex(z));
    CHECK(std::abs(v - std::conj(w)) < 1e-12 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("classical jacobi orthogonality under gauss-legendre") {
  std::vector<double> xs, ws;
  eop::linalg::gauss_legendre(200, xs, ws);
  for (int trial = 0; trial < 6; ++trial) {
    // integer exponents keep the integrand polynomial (GL-200 is then exact up
    // to roundoff); fractional exponents would probe the quadrature, not the
    // orthogonality
    double a = double(trial % 4);
    double b = double((trial + 2) % 4);
    for (int m = 0; m <= 4; ++m) {
      for (int n = m + 1; n <= 5; ++n) {
        double scale = 0.0;
        Complex acc(0.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          double z = xs[i];
          Complex w = std::pow(1.0 - z, a) * std::pow(1.0 + z, b);
          Complex t = ws[i] * w * eop::jacobi_eval(m, Complex(a), Complex(b), Complex(z)) *
                      eop::jacobi_eval(n, Complex(a), Complex(b), Complex(z));
          acc += t;
          scale += std::abs(t);
        }
        CHECK(std::abs(acc) < 1e-9 * std::max(scale, 1.0));
      }
    }
  }
}

TEST_CASE("non-finite inputs are rejected") {
  CHECK_THROWS_AS(eop::laguerre_eval(2, Complex(std::nan("")), Complex(1.0)), eop::DomainError);
  CHECK_THROWS_AS(eop::jacobi_eval(2, Complex(1.0), Complex(1.0),
                                   Complex(std::numeric_limits<double>::infinity())),
                  eop::DomainError);
}
