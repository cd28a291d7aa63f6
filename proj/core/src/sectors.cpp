#include "eop/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "eop/detail/polymath.hpp"
#include "eop/detail/rationals_t.hpp"
#include "eop/errors.hpp"
#include "eop/linalg.hpp"
#include "eop/orthopoly.hpp"

namespace eop {

namespace {

template <class R>
std::complex<R> cup(Complex z) {
  return std::complex<R>(R(z.real()), R(z.imag()));
}

// angular frequency of the z = cos(kappa x) / z = i cot(kappa x) variable map
int frequency(const SectorProblem& pr) {
  if (pr.sector == Sector::Radial) return 0;
  if (pr.sector == Sector::Theta) return (pr.form == Form::I) ? 2 : 1;
  return (pr.form == Form::I) ? 2 * pr.p : pr.p;
}

// ---- precision-generic effective potential -------------------------------

template <class R>
std::complex<R> effective_t(const SectorProblem& pr, R x) {
  using C = std::complex<R>;
  const R one(1);
  switch (pr.sector) {
    case Sector::Radial: {
      const R w = R(pr.omega), dt = R(pr.derived.delta_t);
      return C(w * w * x * x / R(4) + (dt * dt - R(0.25)) / (x * x)) +
             detail::radial_rational_t<R>(pr.m, dt, w, x);
    }
    case Sector::Theta: {
      const R sx = std::sin(x), cx = std::cos(x);
      const R csc2 = one / (sx * sx);
      const C cent = (cup<R>(pr.derived.msq) - R(0.25)) * csc2;
      switch (pr.form) {
        case Form::I: {
          C conv = C(R(pr.C) * csc2 + R(pr.D) / (cx * cx));
          C z(std::cos(2 * x));
          C s2(std::sin(2 * x) * std::sin(2 * x));
          return conv + cent +
                 R(4) * detail::xm_rational_bracket<R>(pr.m, cup<R>(pr.derived.alpha),
                                                       cup<R>(pr.derived.beta), z, s2);
        }
        case Form::II:
        case Form::PT2: {
          C dterm = (pr.form == Form::II) ? C(R(pr.D) * cx * csc2)
                                          : C(R(0), R(pr.D) * cx * csc2);
          C conv = C(R(pr.C) * csc2) + dterm;
          C z(cx), s2(sx * sx);
          return conv + cent +
                 detail::xm_rational_bracket<R>(pr.m, cup<R>(pr.derived.alpha),
                                                cup<R>(pr.derived.beta), z, s2);
        }
        case Form::PT1: {
          C conv = C(R(pr.C) * csc2) + C(R(0), R(pr.D) * cx / sx);
          return conv + cent +
                 detail::eckart_rational_u<R>(pr.m, cup<R>(pr.derived.A),
                                              cup<R>(pr.derived.B), x);
        }
      }
      break;
    }
    case Sector::Phi: {
      const R u = R(pr.p) * x;
      const R su = std::sin(u), cu = std::cos(u);
      const R csc2 = one / (su * su);
      const R pp = R(pr.p) * R(pr.p);
      switch (pr.form) {
        case Form::I: {
          C conv = C(R(pr.G) * csc2 + R(pr.F) / (cu * cu));
          C z(std::cos(2 * u));
          C s2(std::sin(2 * u) * std::sin(2 * u));
          return conv + R(4) * pp *
                            detail::xm_rational_bracket<R>(pr.m, cup<R>(pr.derived.alpha_t),
                                                           cup<R>(pr.derived.beta_t), z, s2);
        }
        case Form::II:
        case Form::PT1: {
          C fterm = (pr.form == Form::II) ? C(R(pr.F) * cu * csc2)
                                          : C(R(0), R(pr.F) * cu * csc2);
          C conv = C(R(pr.G) * csc2) + fterm;
          C z(cu), s2(su * su);
          return conv + pp * detail::xm_rational_bracket<R>(pr.m, cup<R>(pr.derived.alpha_t),
                                                            cup<R>(pr.derived.beta_t), z, s2);
        }
        case Form::PT2: {
          C conv = C(R(pr.G) * csc2) + C(R(0), R(pr.F) * cu / su);
          C Ap = cup<R>(pr.derived.A_phi) / R(pr.p);
          C Bp = cup<R>(pr.derived.B_phi) / R(pr.p);
          return conv + pp * detail::eckart_rational_u<R>(pr.m, Ap, Bp, u);
        }
      }
      break;
    }
  }
  throw DomainError("effective_t: unreachable");
}

} // namespace

bool SectorProblem::real_potential() const {
  if (sector == Sector::Radial) return true;
  if (form != Form::I && form != Form::II) return false;
  if (sector == Sector::Theta)
    return std::abs(derived.msq.imag()) <= 1e-12 * (1.0 + std::abs(derived.msq.real()));
  return true;
}

Complex SectorProblem::bare_potential(double x) const {
  Complex eff = effective_potential(x);
  if (sector == Sector::Radial) {
    // strip the separation centrifugal term, keep delta/r^2
    double dt = derived.delta_t;
    return eff - Complex((dt * dt - 0.25 - delta) / (x * x));
  }
  if (sector == Sector::Theta) {
    double s = std::sin(x);
    return eff - (derived.msq - 0.25) / (s * s);
  }
  return eff;
}

Complex SectorProblem::effective_potential(double x) const {
  return effective_t<double>(*this, x);
}

std::complex<long double> SectorProblem::effective_potential_ld(long double x) const {
  return effective_t<long double>(*this, x);
}

Complex SectorProblem::eigenvalue_paper(int k) const {
  if (k < 0) throw DomainError("eigenvalue_paper: k must be >= 0");
  if (eckart() && k == m)
    throw DegenerateError("sector " + to_string(sector) + " form " + to_string(form) +
                          ": no bound state at paper index k = m = " + std::to_string(m) +
                          " (the new polynomial vanishes identically)");
  switch (sector) {
    case Sector::Phi: return eigen_msq(form, k, p, derived);
    case Sector::Theta: return eigen_ellsq(form, k, derived);
    case Sector::Radial: return Complex(eigen_E(k, omega, derived.delta_t));
  }
  throw DomainError("eigenvalue_paper: unreachable");
}

int SectorProblem::paper_index(int ordinal) const {
  if (ordinal < 0) throw DomainError("paper_index: ordinal must be >= 0");
  if (!eckart()) return ordinal;
  return ordinal < m ? ordinal : ordinal + 1;
}

Complex SectorProblem::eigenvalue(int ordinal) const {
  return eigenvalue_paper(paper_index(ordinal));
}

CoeffPoly SectorProblem::seed_denominator() const {
  switch (sector) {
    case Sector::Radial:
      // L_m^{(dt-1)}(-z), z = omega r^2 / 2
      return laguerre_coefficients(m, Complex(derived.delta_t - 1.0)).reflected();
    case Sector::Theta:
      if (form == Form::PT1)
        return jacobi_coefficients(m, eckart_alpha_n(derived.A, derived.B, m),
                                   eckart_beta_n(derived.A, derived.B, m));
      return jacobi_coefficients(m, -derived.alpha - 1.0, derived.beta - 1.0);
    case Sector::Phi:
      if (form == Form::PT2) {
        Complex Ap = derived.A_phi / double(p), Bp = derived.B_phi / double(p);
        return jacobi_coefficients(m, eckart_alpha_n(Ap, Bp, m), eckart_beta_n(Ap, Bp, m));
      }
      return jacobi_coefficients(m, -derived.alpha_t - 1.0, derived.beta_t - 1.0);
  }
  throw DomainError("seed_denominator: unreachable");
}

SectorProblem make_phi_problem(const PotentialSpec& spec) {
  spec.validate();
  SectorProblem pr;
  pr.sector = Sector::Phi;
  pr.form = spec.variant.phi_form;
  pr.dim = spec.variant.dim;
  pr.m = spec.m3;
  pr.p = spec.p;
  pr.G = spec.G;
  pr.F = spec.F;
  pr.derived = derive_phi_params(pr.form, spec.G, spec.F, spec.p, pr.dim);
  pr.x_lo = 0.0;
  pr.x_hi = (pr.form == Form::I) ? kPi / (2.0 * spec.p) : kPi / spec.p;
  return pr;
}

SectorProblem make_theta_problem(const PotentialSpec& spec, Complex msq) {
  spec.validate();
  if (spec.variant.dim == Dimension::Two)
    throw DomainError("make_theta_problem: no theta sector in 2D");
  SectorProblem pr;
  pr.sector = Sector::Theta;
  pr.form = spec.variant.theta_form;
  pr.dim = spec.variant.dim;
  pr.m = spec.m2;
  pr.C = spec.C;
  pr.D = spec.D;
  pr.derived = derive_theta_params(pr.form, spec.C, spec.D, msq);
  pr.x_lo = 0.0;
  pr.x_hi = (pr.form == Form::I) ? kPi / 2.0 : kPi;
  return pr;
}

SectorProblem make_radial_problem(const PotentialSpec& spec, Complex lam_angular) {
  spec.validate();
  if (std::abs(lam_angular.imag()) > 1e-8 * (1.0 + std::abs(lam_angular.real())))
    throw InadmissibleError("make_radial_problem: angular eigenvalue has a "
                            "non-negligible imaginary part");
  double dt2 = spec.delta + lam_angular.real();
  if (!(dt2 > 0.0))
    throw InadmissibleError("make_radial_problem: delta + l^2 <= 0 (chain inadmissible)");
  SectorProblem pr;
  pr.sector = Sector::Radial;
  pr.form = Form::I;
  pr.dim = spec.variant.dim;
  pr.m = spec.m1;
  pr.omega = spec.omega;
  pr.delta = spec.delta;
  pr.derived.ellsq = lam_angular;
  pr.derived.delta_t = std::sqrt(dt2);
  pr.x_lo = 0.0;
  pr.x_hi = std::numeric_limits<double>::infinity();
  return pr;
}

double radial_box(const SectorProblem& pr, int kmax) {
  return 12.0 * std::sqrt(2.0 * (pr.derived.delta_t + 2.0 * kmax + 2.0 * pr.m) / pr.omega);
}

void check_admissible(const SectorProblem& pr) {
  CoeffPoly den = pr.seed_denominator();
  const int samples = 10000;
  double scale = 0.0;
  for (const Complex& c : den.coeffs()) scale = std::max(scale, abs1(c));
  if (pr.eckart()) {
    Complex A = (pr.sector == Sector::Theta) ? pr.derived.A : pr.derived.A_phi / double(pr.p);
    Complex B = (pr.sector == Sector::Theta) ? pr.derived.B : pr.derived.B_phi / double(pr.p);
    if (pr.m > 0 && abs1(B) < 1e-10)
      throw InadmissibleError("eckart sector: B = 0 puts a denominator node at the "
                              "domain midpoint");
    if (!(A.real() > 1.0))
      throw InadmissibleError("eckart sector: requires Re(A) > 1 for endpoint decay");
    // scan q_m on z = i cot u, u in (0, pi)
    for (int i = 1; i < samples; ++i) {
      double u = kPi * i / samples;
      Complex z(0.0, std::cos(u) / std::sin(u));
      double polyscale = 0.0, zp = 1.0;
      for (const Complex& c : den.coeffs()) {
        polyscale += abs1(c) * zp;
        zp *= std::abs(z);
      }
      if (std::abs(den.eval(z)) < 1e-9 * std::max(polyscale, 1e-300))
        throw SingularDenominatorError("eckart denominator vanishes near u=" +
                                       std::to_string(u));
    }
    return;
  }
  if (pr.sector == Sector::Radial) {
    // L_m^{(dt-1)}(-omega r^2/2) with dt > 0: every series term is positive;
    // scan anyway over the working box
    double zmax = pr.omega * radial_box(pr, 6) * radial_box(pr, 6) / 2.0;
    for (int i = 1; i <= samples; ++i) {
      double z = zmax * i / samples;
      Complex v = den.eval(Complex(z));
      if (v.real() <= 0.0 || std::abs(v) < 1e-12 * scale)
        throw SingularDenominatorError("radial denominator vanishes near z=" +
                                       std::to_string(z));
    }
    return;
  }
  // Jacobi-type denominators on z in (-1, 1): detect both sign changes (real
  // forms) and near-zeros (complex forms)
  bool complex_coeffs = false;
  for (const Complex& c : den.coeffs())
    if (std::abs(c.imag()) > 1e-12 * scale) complex_coeffs = true;
  double prev_sign = 0.0;
  for (int i = 0; i <= samples; ++i) {
    double z = -1.0 + 2.0 * double(i) / samples;
    Complex v = den.eval(Complex(z));
    if (std::abs(v) < 1e-9 * std::max(scale, 1e-300))
      throw SingularDenominatorError("seed denominator vanishes near z=" + std::to_string(z) +
                                     " (inadmissible parameters)");
    if (!complex_coeffs) {
      double sgn = v.real() > 0 ? 1.0 : -1.0;
      if (prev_sign != 0.0 && sgn != prev_sign)
        throw SingularDenominatorError("seed denominator changes sign on (-1,1) near z=" +
                                       std::to_string(z));
      prev_sign = sgn;
    }
  }
}

// --------------------------------------------------------------------------
// collocation construction of the polynomial part
// --------------------------------------------------------------------------

namespace {

struct AnsatzGeometry {
  // prefactor log-derivative and its derivative, variable map and derivatives
  std::function<Complex(double)> dlog, dlogp;
  std::function<Complex(double)> z, dz, d2z;
};

AnsatzGeometry make_geometry(const SectorProblem& pr, int k) {
  AnsatzGeometry g;
  const int kap = frequency(pr);
  if (pr.sector == Sector::Radial) {
    const double c = pr.derived.delta_t + 0.5, w = pr.omega;
    g.dlog = [c, w](double r) { return Complex(c / r - w * r / 2.0); };
    g.dlogp = [c, w](double r) { return Complex(-c / (r * r) - w / 2.0); };
    g.z = [w](double r) { return Complex(w * r * r / 2.0); };
    g.dz = [w](double r) { return Complex(w * r); };
    g.d2z = [w](double) { return Complex(w); };
    return g;
  }
  if (pr.eckart()) {
    Complex A = (pr.sector == Sector::Theta) ? pr.derived.A : pr.derived.A_phi / double(pr.p);
    Complex B = (pr.sector == Sector::Theta) ? pr.derived.B : pr.derived.B_phi / double(pr.p);
    Complex s = A - 1.0 + double(k);
    Complex btil = B / s;
    double ka = double(kap);
    g.dlog = [s, btil, ka](double x) {
      return ka * (s * std::cos(ka * x) / std::sin(ka * x) + Complex(0.0, 1.0) * btil);
    };
    g.dlogp = [s, ka](double x) {
      double sn = std::sin(ka * x);
      return -ka * ka * s / (sn * sn);
    };
    g.z = [ka](double x) { return Complex(0.0, std::cos(ka * x) / std::sin(ka * x)); };
    g.dz = [ka](double x) {
      double sn = std::sin(ka * x);
      return Complex(0.0, -ka / (sn * sn));
    };
    g.d2z = [ka](double x) {
      double sn = std::sin(ka * x);
      return Complex(0.0, 2.0 * ka * ka * std::cos(ka * x) / (sn * sn * sn));
    };
    return g;
  }
  // EOP sectors: prefactor (1-z)^u (1+z)^v, z = cos(kappa x)
  Complex al = (pr.sector == Sector::Theta) ? pr.derived.alpha : pr.derived.alpha_t;
  Complex be = (pr.sector == Sector::Theta) ? pr.derived.beta : pr.derived.beta_t;
  Complex u = al / 2.0 + 0.25, v = be / 2.0 + 0.25;
  double ka = double(kap);
  g.dlog = [u, v, ka](double x) {
    double half = ka * x / 2.0;
    return ka * (u * std::cos(half) / std::sin(half) - v * std::sin(half) / std::cos(half));
  };
  g.dlogp = [u, v, ka](double x) {
    double half = ka * x / 2.0;
    double csc = 1.0 / std::sin(half), sec = 1.0 / std::cos(half);
    return -ka * ka / 2.0 * (u * csc * csc + v * sec * sec);
  };
  g.z = [ka](double x) { return Complex(std::cos(ka * x)); };
  g.dz = [ka](double x) { return Complex(-ka * std::sin(ka * x)); };
  g.d2z = [ka](double x) { return Complex(-ka * ka * std::cos(ka * x)); };
  return g;
}

std::vector<double> collocation_points(const SectorProblem& pr, int npts,
                                       const CoeffPoly& den) {
  const int kap = frequency(pr);
  std::vector<double> xs;
  xs.reserve(npts);
  auto den_ok = [&](double x) {
    Complex z = (pr.sector == Sector::Radial)
                    ? Complex(pr.omega * x * x / 2.0)
                    : (pr.eckart() ? Complex(0.0, std::cos(kap * x) / std::sin(kap * x))
                                   : Complex(std::cos(kap * x)));
    double polyscale = 0.0, zp = 1.0;
    for (const Complex& c : den.coeffs()) {
      polyscale += abs1(c) * std::max(zp, 1.0);
      zp *= std::abs(z);
    }
    return std::abs(den.eval(z)) > 1e-8 * std::max(polyscale, 1e-300);
  };
  for (int j = 0; j < npts; ++j) {
    double x;
    if (pr.sector == Sector::Radial) {
      double zlo = 0.35, zhi = std::max(4.0, npts + 0.5);
      double z = zlo + (zhi - zlo) * double(j) / (npts - 1);
      x = std::sqrt(2.0 * z / pr.omega);
    } else if (pr.eckart()) {
      double u = 0.4 + (kPi - 0.8) * double(j) / (npts - 1);
      x = u / kap;
    } else {
      double z = -0.85 + 1.75 * double(j) / (npts - 1);
      x = std::acos(z) / kap;
    }
    for (int tries = 0; tries < 8 && !den_ok(x); ++tries) x *= 1.004;
    xs.push_back(x);
  }
  return xs;
}

} // namespace

CoeffPoly exceptional_poly_from_ode(const SectorProblem& pr, int k) {
  const int deg = pr.eckart() ? k + pr.m - 1 : k + pr.m;
  if (deg < 0)
    throw DegenerateError("exceptional_poly_from_ode: no polynomial at this index");
  const Complex lam = pr.eigenvalue_paper(k);
  const CoeffPoly den = pr.seed_denominator();
  const CoeffPoly den1 = den.derivative();
  const CoeffPoly den2 = den1.derivative();
  const AnsatzGeometry geo = make_geometry(pr, k);

  const int cols = deg + 1;
  const int rows = deg + 2;
  const std::vector<double> xs = collocation_points(pr, rows, den);
  std::vector<Complex> M(std::size_t(rows) * cols);

  for (int j = 0; j < rows; ++j) {
    const double x = xs[j];
    const Complex z = geo.z(x), dz = geo.dz(x), d2z = geo.d2z(x);
    const Complex dl = geo.dlog(x), dl2 = geo.dlogp(x) + dl * dl;
    const Complex D = den.eval(z), D1 = den1.eval(z), D2 = den2.eval(z);
    const Complex Vml = pr.effective_potential(x) - lam;
    Complex zpow_m2(0.0), zpow_m1(0.0), zpow(1.0); // z^{kk-2}, z^{kk-1}, z^kk
    double rowscale = 0.0;
    for (int kk = 0; kk < cols; ++kk) {
      const Complex N = zpow;
      const Complex N1 = double(kk) * zpow_m1;
      const Complex N2 = double(kk) * double(kk - 1) * zpow_m2;
      const Complex G = N / D;
      const Complex G1 = (N1 * D - N * D1) / (D * D);
      const Complex G2 = (N2 * D - N * D2) / (D * D) - 2.0 * D1 * (N1 * D - N * D1) / (D * D * D);
      M[std::size_t(j) * cols + kk] =
          -(dl2 * G + 2.0 * dl * G1 * dz + G2 * dz * dz + G1 * d2z) + Vml * G;
      // the largest constituent term sets the roundoff scale of this row
      rowscale = std::max({rowscale, std::abs(dl2 * G), std::abs(2.0 * dl * G1 * dz),
                           std::abs(G2 * dz * dz), std::abs(G1 * d2z), std::abs(Vml * G)});
      zpow_m2 = zpow_m1;
      zpow_m1 = zpow;
      zpow *= z;
    }
    if (rowscale > 0.0)
      for (int kk = 0; kk < cols; ++kk) M[std::size_t(j) * cols + kk] /= rowscale;
  }
  double overall = 0.0;
  for (const Complex& v : M) overall = std::max(overall, std::abs(v));
  std::vector<double> colscale(cols, 1.0);
  for (int kk = 0; kk < cols && cols > 1; ++kk) {
    double big = 0.0;
    for (int j = 0; j < rows; ++j) big = std::max(big, std::abs(M[std::size_t(j) * cols + kk]));
    // an (almost) annihilated column is already a nullspace direction; scaling
    // it up would manufacture rank
    if (big > 1e-10 * overall) {
      colscale[kk] = 1.0 / big;
      for (int j = 0; j < rows; ++j) M[std::size_t(j) * cols + kk] *= colscale[kk];
    }
  }

  linalg::Svd svd = linalg::svd_jacobi(M, rows, cols);
  const double smax = std::max(svd.sigma.front(), 1.0);
  const double smin = svd.sigma.back();
  const double snext = cols >= 2 ? svd.sigma[cols - 2] : smax;
  if (!(smin <= 1e-7 * smax) || !(snext >= 1e-5 * smax))
    throw RankError("exceptional_poly_from_ode: collocation nullspace is not "
                    "one-dimensional (sigma_min/sigma_max = " +
                    std::to_string(smin / smax) + ", next = " + std::to_string(snext / smax) +
                    "); parameters inadmissible or state degenerate");

  std::vector<Complex> c(cols);
  double cbig = 0.0;
  for (int kk = 0; kk < cols; ++kk) {
    c[kk] = svd.v_entry(kk, cols - 1) * colscale[kk];
    cbig = std::max(cbig, std::abs(c[kk]));
  }
  // normalize by the highest non-negligible coefficient; degenerate parameter
  // sets (extension identically absent) collapse to a lower-degree polynomial
  int lead_idx = cols - 1;
  while (lead_idx > 0 && std::abs(c[lead_idx]) < 1e-10 * cbig) --lead_idx;
  Complex lead = c[lead_idx];
  c.resize(lead_idx + 1);
  for (Complex& v : c) v /= lead;
  return CoeffPoly(std::move(c)).trim(1e-13);
}

// --------------------------------------------------------------------------
// closed-form solution assembly
// --------------------------------------------------------------------------

namespace {

struct Evaluator {
  // prefactor data
  int kind = 0; // 0 radial, 1 EOP, 2 eckart
  double kappa = 1.0;
  double omega = 1.0;
  Complex e1, e2; // radial: (c,0); EOP: (u,v); eckart: (s, btil)
  std::vector<Complex> num, den;
  Complex scale{1.0, 0.0};

  template <class R>
  std::complex<R> operator()(R x) const {
    using C = std::complex<R>;
    C z, pref;
    if (kind == 0) {
      const R w = R(omega);
      z = C(w * x * x / R(2));
      pref = std::exp(cup<R>(e1) * std::log(x) - w * x * x / R(4));
    } else if (kind == 1) {
      const R kx = R(kappa) * x;
      z = C(std::cos(kx));
      pref = std::exp(cup<R>(e1) * std::log(R(1) - std::cos(kx)) +
                      cup<R>(e2) * std::log(R(1) + std::cos(kx)));
    } else {
      const R kx = R(kappa) * x;
      z = C(R(0), std::cos(kx) / std::sin(kx));
      pref = std::exp(cup<R>(e1) * std::log(std::sin(kx)) +
                      C(R(0), R(1)) * cup<R>(e2) * kx);
    }
    const C nv = detail::horner_t<R>(num, z);
    const C dv = detail::horner_t<R>(den, z);
    return cup<R>(scale) * pref * nv / dv;
  }
};

} // namespace

SectorSolution sector_solution(const SectorProblem& pr, int ordinal) {
  const int k = pr.paper_index(ordinal);
  SectorSolution sol;
  sol.sector = pr.sector;
  sol.form = pr.form;
  sol.dim = pr.dim;
  sol.quantum_number = ordinal;
  sol.paper_index = k;
  sol.m = pr.m;
  sol.eigenvalue = pr.eigenvalue_paper(k);
  sol.x_lo = pr.x_lo;
  sol.x_hi = (pr.sector == Sector::Radial) ? radial_box(pr, std::max(k, 1)) : pr.x_hi;
  sol.denominator = pr.seed_denominator();

  if (pr.eckart()) {
    Complex A = (pr.sector == Sector::Theta) ? pr.derived.A : pr.derived.A_phi / double(pr.p);
    Complex B = (pr.sector == Sector::Theta) ? pr.derived.B : pr.derived.B_phi / double(pr.p);
    if (pr.m == 0) {
      // conventional state: classical Jacobi with the paper-index exponents
      sol.numerator = jacobi_coefficients(k - 1, eckart_alpha_n(A, B, k),
                                          eckart_beta_n(A, B, k));
    } else {
      sol.numerator = y_polynomial(k, pr.m, A, B);
      if (sol.numerator.is_zero(1e-300))
        throw DegenerateError("sector_solution: y polynomial vanishes identically");
    }
  } else {
    sol.numerator = exceptional_poly_from_ode(pr, k);
  }

  Evaluator ev;
  ev.num = sol.numerator.coeffs();
  ev.den = sol.denominator.coeffs();
  if (pr.sector == Sector::Radial) {
    ev.kind = 0;
    ev.omega = pr.omega;
    ev.e1 = Complex(pr.derived.delta_t + 0.5);
  } else if (pr.eckart()) {
    ev.kind = 2;
    ev.kappa = frequency(pr);
    Complex A = (pr.sector == Sector::Theta) ? pr.derived.A : pr.derived.A_phi / double(pr.p);
    Complex B = (pr.sector == Sector::Theta) ? pr.derived.B : pr.derived.B_phi / double(pr.p);
    Complex s = A - 1.0 + double(k);
    ev.e1 = s;
    ev.e2 = B / s;
  } else {
    ev.kind = 1;
    ev.kappa = frequency(pr);
    Complex al = (pr.sector == Sector::Theta) ? pr.derived.alpha : pr.derived.alpha_t;
    Complex be = (pr.sector == Sector::Theta) ? pr.derived.beta : pr.derived.beta_t;
    ev.e1 = al / 2.0 + 0.25;
    ev.e2 = be / 2.0 + 0.25;
  }

  // unit L2 norm over the (truncated) domain
  {
    static const auto table = [] {
      std::pair<std::vector<double>, std::vector<double>> t;
      linalg::gauss_legendre(200, t.first, t.second);
      return t;
    }();
    const double a = (pr.sector == Sector::Radial) ? 0.0 : sol.x_lo;
    const double b = sol.x_hi;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double n2 = 0.0;
    for (std::size_t i = 0; i < table.first.size(); ++i) {
      double x = mid + half * table.first[i];
      n2 += table.second[i] * std::norm(ev.operator()<double>(x));
    }
    n2 *= half;
    if (!(n2 > 0.0) || !std::isfinite(n2))
      throw InadmissibleError("sector_solution: eigenfunction is not normalizable "
                              "on its domain");
    ev.scale = Complex(1.0 / std::sqrt(n2));
  }

  sol.eval = [ev](double x) { return ev.operator()<double>(x); };
  sol.eval_ld = [ev](long double x) { return ev.operator()<long double>(x); };
  return sol;
}

SectorSolution sector_solution(Sector sector, Form form, const PotentialSpec& spec,
                               int ordinal) {
  PotentialSpec sp = spec;
  if (sector == Sector::Theta)
    sp.variant.theta_form = form;
  else if (sector == Sector::Phi)
    sp.variant.phi_form = form;
  SectorProblem phi = make_phi_problem(sp);
  if (sector == Sector::Phi) return sector_solution(phi, ordinal);
  Complex msq = phi.eigenvalue(0);
  if (sp.variant.dim == Dimension::Two) {
    if (sector != Sector::Radial)
      throw DomainError("sector_solution: no theta sector in 2D");
    return sector_solution(make_radial_problem(sp, msq), ordinal);
  }
  SectorProblem th = make_theta_problem(sp, msq);
  if (sector == Sector::Theta) return sector_solution(th, ordinal);
  Complex ellsq = th.eigenvalue(0);
  return sector_solution(make_radial_problem(sp, ellsq), ordinal);
}

} // namespace eop
