#include "doctest.h"

#include <cmath>

#include "eop/errors.hpp"
#include "eop/numverify.hpp"
#include "eop/sectors.hpp"
#include "test_oracles.hpp"

using eop::Complex;
using eop::Dimension;
using eop::Form;
using eop::Grid1D;
using eop::PotentialSpec;

namespace {
constexpr double kPi = 3.14159265358979323846;

PotentialSpec default_spec(Form theta, Form phi, Dimension dim = Dimension::Three) {
  PotentialSpec s;
  s.variant.dim = dim;
  s.variant.theta_form = theta;
  s.variant.phi_form = phi;
  return s;
}
} // namespace

TEST_CASE("particle in a box") {
  Grid1D g{0.0, kPi, 999};
  auto spec = eop::numeric_spectrum([](double) { return Complex(0.0); }, g, 3);
  for (int k = 1; k <= 3; ++k) {
    double want = k * k;
    CHECK(std::abs(spec.eigenvalues[k - 1].real() - want) < 1e-5 * want);
    CHECK(spec.richardson_error[k - 1] < 1e-4);
  }
}

TEST_CASE("conventional radial oscillator lowest level") {
  // omega = 1, delta_t = 2: E_0 = omega (1 + delta_t) = 3
  auto V = [](double r) {
    return Complex(r * r / 4.0 + (4.0 - 0.25) / (r * r));
  };
  Grid1D g{1e-4, 20.0, 4000};
  auto spec = eop::numeric_spectrum(V, g, 1);
  CHECK(std::abs(spec.eigenvalues[0].real() - 3.0) < 1e-5 * 3.0);
}

TEST_CASE("complex path equals symmetric path after constant imaginary shift") {
  auto Vr = [](double x) { return Complex(4.0 * std::cos(2 * x)); };
  auto Vc = [](double x) { return Complex(4.0 * std::cos(2 * x), 0.5); };
  Grid1D g{0.0, kPi, 500};
  auto sr = eop::numeric_spectrum(Vr, g, 4);
  auto sc = eop::numeric_spectrum(Vc, g, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(sc.eigenvalues[i].real() - sr.eigenvalues[i].real()) <
          1e-10 * (1.0 + std::abs(sr.eigenvalues[i])));
    CHECK(std::abs(sc.eigenvalues[i].imag() - 0.5) < 1e-10);
  }
}

TEST_CASE("grid convergence ratio is h^2 for smooth potentials") {
  auto V = [](double x) { return Complex(3.0 * std::sin(x) * std::sin(x)); };
  Grid1D g1{0.0, kPi, 500};
  Grid1D g2{0.0, kPi, 1001};
  auto s1 = eop::numeric_spectrum(V, g1, 3);
  auto s2 = eop::numeric_spectrum(V, g2, 3);
  // compare raw per-grid values: error(N) / error(2N) should be ~4
  for (int i = 0; i < 3; ++i) {
    double exact = s2.eigenvalues[i].real(); // extrapolated, much more accurate
    double e1 = std::abs(s1.values_coarse[i].real() - exact);
    double e2 = std::abs(s1.values_fine[i].real() - exact);
    double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}

TEST_CASE("residual oracle") {
  PotentialSpec s = default_spec(Form::I, Form::I);
  SUBCASE("conventional radial ground state") {
    auto rad = eop::make_radial_problem(s, Complex(4.0 - s.delta));
    auto sol = eop::sector_solution(rad, 0);
    CHECK(eop::residual_norm(sol, rad) < 1e-9);
  }
  SUBCASE("extended radial state and sensitivity control") {
    PotentialSpec se = s;
    se.m1 = 1;
    auto rad = eop::make_radial_problem(se, Complex(4.0 - se.delta));
    auto sol = eop::sector_solution(rad, 0);
    CHECK(eop::residual_norm(sol, rad) < 1e-8);
    double bad = eop::residual_norm(sol, rad, sol.eigenvalue + Complex(0.1));
    CHECK(bad > 1e-2);
  }
}

TEST_CASE("inner product quadrature") {
  SUBCASE("legendre orthogonality") {
    auto p1 = [](double z) { return Complex(z); };
    auto p2 = [](double z) { return Complex(1.5 * z * z - 0.5); };
    Complex v = eop::inner_product(p1, p2, [](double) { return Complex(1.0); }, -1.0, 1.0);
    CHECK(std::abs(v) < 1e-12);
  }
  SUBCASE("distinct theta eigenfunctions are orthogonal") {
    PotentialSpec s = default_spec(Form::I, Form::I);
    s.m2 = 1;
    auto th = eop::make_theta_problem(s, Complex(4.0));
    auto s0 = eop::sector_solution(th, 0);
    auto s1 = eop::sector_solution(th, 1);
    Complex v = eop::inner_product([&](double x) { return s0.eval(x); },
                                   [&](double x) { return s1.eval(x); },
                                   [](double) { return Complex(1.0); }, s0.x_lo, s0.x_hi);
    CHECK(std::abs(v) < 1e-8);
  }
}

TEST_CASE("eckart sector spectra carry the shifted index structure") {
  PotentialSpec s = default_spec(Form::PT1, Form::I);
  s.m2 = 1;
  auto th = eop::make_theta_problem(s, Complex(4.0));
  Grid1D g = eop::oracle_grid(th, 1000, 6);
  auto spec = eop::numeric_spectrum([&](double x) { return th.effective_potential(x); }, g, 4);
  // lowest 4 = analytic ordinals 0..3, i.e. paper indices {0, 2, 3, 4}
  for (int n = 0; n < 4; ++n) {
    Complex want = th.eigenvalue(n);
    double tol = std::max(5e-6 * std::abs(want), 3.0 * spec.richardson_error[n]);
    CHECK(std::abs(spec.eigenvalues[n] - want) < tol);
    CHECK(std::abs(spec.eigenvalues[n].imag()) < 1e-7);
  }
  // and the m2 = 0 conventional spectrum is the paper rule at m = 0
  PotentialSpec s0 = s;
  s0.m2 = 0;
  auto th0 = eop::make_theta_problem(s0, Complex(4.0));
  auto spec0 = eop::numeric_spectrum([&](double x) { return th0.effective_potential(x); },
                                     eop::oracle_grid(th0, 1000, 6), 4);
  for (int n = 0; n < 4; ++n) {
    Complex want = th0.eigenvalue(n); // paper index n+1
    double tol = std::max(5e-6 * std::abs(want), 3.0 * spec0.richardson_error[n]);
    CHECK(std::abs(spec0.eigenvalues[n] - want) < tol);
  }
  // the extended problem keeps every conventional level except paper index m2,
  // and gains the bottom level h(A-1)
  CHECK(std::abs(spec.eigenvalues[0] - th.eigenvalue_paper(0)) <
        std::max(5e-6 * std::abs(th.eigenvalue_paper(0)), 3.0 * spec.richardson_error[0]));
  CHECK(std::abs(spec.eigenvalues[1] - spec0.eigenvalues[1]) <
        1e-4 * std::abs(spec0.eigenvalues[1]));
}

TEST_CASE("hamiltonian construction errors") {
  Grid1D bad{0.0, 1.0, 8};
  CHECK_THROWS_AS(eop::build_hamiltonian([](double) { return Complex(0.0); }, bad),
                  eop::DomainError);
  Grid1D g{0.0, 1.0, 64};
  CHECK_THROWS_AS(eop::build_hamiltonian(
                      [](double x) {
                        return x > 0.9 ? Complex(std::nan("")) : Complex(0.0);
                      },
                      g),
                  eop::DomainError);
}
