#include "doctest.h"

#include <cmath>

#include "eop/assembly.hpp"
#include "eop/errors.hpp"
#include "eop/variants.hpp"
#include "test_oracles.hpp"

using eop::Complex;
using eop::Dimension;
using eop::Form;
using eop::PotentialSpec;
using eop::VariantId;

namespace {
constexpr double kPi = 3.14159265358979323846;

PotentialSpec spec3(Form theta, Form phi) {
  PotentialSpec s;
  s.variant = VariantId{Dimension::Three, theta, phi};
  return s;
}

PotentialSpec spec2(Form phi) {
  PotentialSpec s;
  s.variant = VariantId{Dimension::Two, Form::I, phi};
  return s;
}
} // namespace

TEST_CASE("variant registry") {
  auto v3 = eop::list_variants(Dimension::Three);
  CHECK(v3.size() == 12);
  int real3 = 0, theta_pt2 = 0;
  for (const auto& v : v3) {
    if (v.is_real()) ++real3;
    if (v.theta_form == Form::PT2) ++theta_pt2;
  }
  CHECK(real3 == 4);
  CHECK(theta_pt2 == 3);
  auto v2 = eop::list_variants(Dimension::Two);
  CHECK(v2.size() == 4);
  int real2 = 0;
  for (const auto& v : v2)
    if (v.is_real()) ++real2;
  CHECK(real2 == 2);
  CHECK(v3.size() + v2.size() == 16);

  CHECK(eop::parse_variant("PT1:II", Dimension::Three).theta_form == Form::PT1);
  CHECK(eop::parse_variant("PT2", Dimension::Two).phi_form == Form::PT2);
  CHECK_THROWS_AS(eop::parse_variant("I:PT2", Dimension::Three), eop::DomainError);
}

TEST_CASE("product-form identity") {
  PotentialSpec s = spec3(Form::I, Form::I);
  s.m1 = 1;
  s.m2 = 1;
  s.m3 = 1;
  auto fs = eop::solve_3d(s, 0, 1, 0);
  for (int i = 0; i < 100; ++i) {
    double r = oracles::uniform(0.3, 6.0);
    double th = oracles::uniform(0.1, kPi / 2 - 0.1);
    double ph = oracles::uniform(0.05, kPi / 2 - 0.05);
    Complex lhs = fs.psi(r, th, ph);
    Complex rhs = fs.radial.eval(r) / r * fs.theta->eval(th) / std::sqrt(std::sin(th)) *
                  fs.phi.eval(ph);
    CHECK(std::abs(lhs - rhs) == 0.0);
  }
}

TEST_CASE("chain energies") {
  SUBCASE("all-zero couplings ground state: E = 4.5") {
    PotentialSpec s = spec3(Form::I, Form::I);
    s.omega = 1.0;
    s.delta = 0.0;
    s.C = s.D = s.G = s.F = 0.0;
    s.p = 1;
    s.m1 = s.m2 = s.m3 = 1;
    auto fs = eop::solve_3d(s, 0, 0, 0);
    CHECK(fs.E == doctest::Approx(4.5).epsilon(1e-13));
    s.m1 = s.m2 = s.m3 = 0;
    auto fs0 = eop::solve_3d(s, 0, 0, 0);
    CHECK(fs0.E == doctest::Approx(fs.E).epsilon(1e-13));
  }
  SUBCASE("E is independent of m for the EOP variants") {
    for (Form tf : {Form::I, Form::II, Form::PT2}) {
      for (Form pf : {Form::I, Form::II, Form::PT1}) {
        PotentialSpec s = spec3(tf, pf);
        double e_ref = 0.0;
        bool first = true;
        for (int m1 : {0, 1, 2}) {
          for (int m2 : {0, 1, 2}) {
            for (int m3 : {0, 1, 2}) {
              s.m1 = m1;
              s.m2 = m2;
              s.m3 = m3;
              auto fs = eop::solve_3d(s, 1, 1, 1);
              if (first) {
                e_ref = fs.E;
                first = false;
              } else {
                CHECK(std::abs(fs.E - e_ref) < 1e-12 * std::abs(e_ref));
              }
            }
          }
        }
      }
    }
  }
  SUBCASE("2D chain: G=F=0, p=1, delta=0 gives E = 3") {
    PotentialSpec s = spec2(Form::I);
    s.omega = 1.0;
    s.delta = 0.0;
    s.G = s.F = 0.0;
    auto fs = eop::solve_2d(s, 0, 0);
    CHECK(fs.E == doctest::Approx(3.0).epsilon(1e-13));
  }
  SUBCASE("2D PT2 example eigenvalue") {
    PotentialSpec s = spec2(Form::PT2);
    s.G = 0.0;
    s.F = 3.0;
    s.p = 1;
    auto phi = eop::make_phi_problem(s);
    // A = 1, B = 1.5: paper index 1 -> (1-1+1)^2 + 2.25 = 3.25
    CHECK(std::abs(phi.eigenvalue_paper(1) - Complex(3.25)) < 1e-13);
  }
}

TEST_CASE("full potential assembly") {
  SUBCASE("m = 0 reduction to the conventional seven-parameter potential") {
    PotentialSpec s = spec3(Form::I, Form::I);
    eop::Potential3D V(s);
    for (int i = 0; i < 50; ++i) {
      double r = oracles::uniform(0.3, 5.0);
      double th = oracles::uniform(0.1, kPi / 2 - 0.1);
      double ph = oracles::uniform(0.05, kPi / 2 - 0.05);
      double s2 = std::sin(th) * std::sin(th);
      double want = s.omega * s.omega * r * r / 4.0 + s.delta / (r * r) +
                    s.C / (r * r * s2) + s.D / (r * r * std::cos(th) * std::cos(th)) +
                    s.G / (r * r * s2 * std::pow(std::sin(s.p * ph), 2)) +
                    s.F / (r * r * s2 * std::pow(std::cos(s.p * ph), 2));
      CHECK(std::abs(V(r, th, ph) - Complex(want)) < 1e-12 * (1.0 + std::abs(want)));
    }
  }
  SUBCASE("extended I/I potential composes sector terms") {
    PotentialSpec s = spec3(Form::I, Form::I);
    s.m1 = 1;
    s.m2 = 1;
    s.m3 = 1;
    eop::Potential3D V(s);
    auto phi = V.phi_problem();
    auto th = V.theta_problem();
    auto rad = V.radial_problem();
    for (int i = 0; i < 50; ++i) {
      double r = oracles::uniform(0.3, 5.0);
      double t = oracles::uniform(0.1, kPi / 2 - 0.1);
      double ph = oracles::uniform(0.05, kPi / 2 - 0.05);
      double s2 = std::sin(t) * std::sin(t);
      Complex want = rad.bare_potential(r) + th.bare_potential(t) / (r * r) +
                     phi.bare_potential(ph) / (r * r * s2);
      CHECK(std::abs(V(r, t, ph) - want) < 1e-13 * (1.0 + std::abs(want)));
      // cross-check the theta piece against the standalone rational + conventional
      Complex vth = eop::theta_rational(Form::I, 1, th.derived, t) +
                    Complex(s.C / s2 + s.D / (std::cos(t) * std::cos(t)));
      CHECK(std::abs(th.bare_potential(t) - vth) < 1e-11 * (1.0 + std::abs(vth)));
    }
  }
  SUBCASE("pt covariance where it holds") {
    // theta-PT1 x phi-I, any m: V(r, pi-th, ph+pi) = conj V(r, th, ph)
    for (int m2 : {1, 2}) {
      PotentialSpec s = spec3(Form::PT1, Form::I);
      s.m1 = 1;
      s.m2 = m2;
      s.m3 = 1;
      eop::Potential3D V(s);
      for (int i = 0; i < 30; ++i) {
        double r = oracles::uniform(0.3, 5.0);
        double t = oracles::uniform(0.1, kPi - 0.1);
        double ph = oracles::uniform(0.05, kPi / 2 - 0.05);
        Complex a = V(r, kPi - t, ph + kPi);
        Complex b = std::conj(V(r, t, ph));
        CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)));
      }
    }
    // theta-PT2 at m2 = 1 only
    PotentialSpec s = spec3(Form::PT2, Form::I);
    s.m2 = 1;
    eop::Potential3D V1(s);
    double r = 1.7, t = 0.9, ph = 0.31;
    CHECK(std::abs(V1(r, kPi - t, ph + kPi) - std::conj(V1(r, t, ph))) < 1e-10);
    s.m2 = 2;
    eop::Potential3D V2(s);
    CHECK(std::abs(V2(r, kPi - t, ph + kPi) - std::conj(V2(r, t, ph))) > 1e-3);
  }
  SUBCASE("2D PT2 parity covariance: V(r, pi/p - ... reflected phi) = conj V") {
    PotentialSpec s = spec2(Form::PT2);
    s.m1 = 1;
    s.m3 = 2;
    eop::Potential2D V(s);
    for (int i = 0; i < 30; ++i) {
      double r = oracles::uniform(0.3, 5.0);
      double ph = oracles::uniform(0.05, kPi - 0.05);
      Complex a = V(r, kPi - ph);
      Complex b = std::conj(V(r, ph));
      CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)));
    }
  }
}

TEST_CASE("2d and 3d radial sectors share the operation") {
  PotentialSpec s3 = spec3(Form::I, Form::I);
  PotentialSpec s2 = spec2(Form::I);
  Complex lam(7.3);
  auto r3 = eop::make_radial_problem(s3, lam);
  auto r2 = eop::make_radial_problem(s2, lam);
  CHECK(r3.derived.delta_t == doctest::Approx(r2.derived.delta_t));
  for (double r : {0.5, 1.0, 3.0})
    CHECK(std::abs(r3.effective_potential(r) - r2.effective_potential(r)) == 0.0);
}

TEST_CASE("inadmissible chain raises") {
  PotentialSpec s = spec3(Form::I, Form::I);
  CHECK_THROWS_AS(eop::make_radial_problem(s, Complex(-1.0)), eop::InadmissibleError);
  CHECK_THROWS_AS(eop::make_radial_problem(s, Complex(1.0, 0.5)), eop::InadmissibleError);
}
