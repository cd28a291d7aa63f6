#include "eop/numverify.hpp"

#include <algorithm>
#include <cmath>

#include "eop/errors.hpp"
#include "eop/linalg.hpp"

namespace eop {

namespace {

bool nearly_real(const std::vector<Complex>& v) {
  for (const Complex& z : v)
    if (std::abs(z.imag()) > 1e-12 * (1.0 + std::abs(z.real()))) return false;
  return true;
}

std::vector<Complex> ql_smallest(const TridiagOperator& T, int k) {
  const int n = static_cast<int>(T.diag.size());
  std::vector<double> d(n), e(n - 1, T.off);
  for (int i = 0; i < n; ++i) d[i] = T.diag[i].real();
  std::vector<double> ev = linalg::symtridiag_eigenvalues(std::move(d), std::move(e));
  std::vector<Complex> out;
  for (int i = 0; i < k && i < n; ++i) out.emplace_back(ev[i], 0.0);
  return out;
}

std::vector<Complex> refine_candidates(const TridiagOperator& T,
                                       const std::vector<Complex>& cand, int k) {
  std::vector<Complex> refined;
  for (const Complex& c : cand) {
    bool ok = false;
    Complex mu = linalg::tridiag_rqi(T.diag, T.off, c, 500, 1e-13, &ok);
    if (!ok)
      throw ConvergenceError("numeric_spectrum: Rayleigh refinement hit its iteration cap");
    bool dup = false;
    for (const Complex& e : refined)
      if (std::abs(e - mu) < 1e-8 * (1.0 + std::abs(mu))) dup = true;
    if (!dup) refined.push_back(mu);
  }
  std::sort(refined.begin(), refined.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  if (static_cast<int>(refined.size()) < k)
    throw ConvergenceError("numeric_spectrum: refinement lost eigenvalues (got " +
                           std::to_string(refined.size()) + ", want " + std::to_string(k) + ")");
  refined.resize(k);
  return refined;
}

} // namespace

std::vector<Complex> TridiagOperator::to_dense() const {
  const int n = static_cast<int>(diag.size());
  std::vector<Complex> a(std::size_t(n) * n, Complex(0.0));
  for (int i = 0; i < n; ++i) {
    a[i * n + i] = diag[i];
    if (i + 1 < n) {
      a[i * n + i + 1] = Complex(off);
      a[(i + 1) * n + i] = Complex(off);
    }
  }
  return a;
}

TridiagOperator build_hamiltonian(const std::function<Complex(double)>& V, Grid1D grid) {
  if (grid.N < 32) throw DomainError("build_hamiltonian: N must be >= 32");
  TridiagOperator T;
  T.grid = grid;
  const double h = grid.h();
  T.off = -1.0 / (h * h);
  T.diag.resize(grid.N);
  for (int i = 1; i <= grid.N; ++i) {
    Complex v = V(grid.node(i));
    if (!is_finite(v))
      throw DomainError("build_hamiltonian: potential non-finite at node x=" +
                        std::to_string(grid.node(i)));
    T.diag[i - 1] = v + 2.0 / (h * h);
  }
  T.real_symmetric = nearly_real(T.diag);
  return T;
}

GridSpectrum numeric_spectrum(const std::function<Complex(double)>& V, Grid1D grid, int k) {
  if (k < 1 || k > 8) throw DomainError("numeric_spectrum: k must be in [1, 8]");
  GridSpectrum s;
  s.grid = grid;
  TridiagOperator TN = build_hamiltonian(V, grid);
  Grid1D fine = grid;
  fine.N = 2 * grid.N + 1; // halves h on the same interval
  TridiagOperator T2 = build_hamiltonian(V, fine);

  if (TN.real_symmetric && T2.real_symmetric) {
    s.values_coarse = ql_smallest(TN, k);
    s.values_fine = ql_smallest(T2, k);
  } else {
    // global scan on a coarse dense grid supplies the candidates
    Grid1D cg = grid;
    cg.N = std::min(grid.N, 360);
    TridiagOperator Tc = build_hamiltonian(V, cg);
    std::vector<Complex> cand = linalg::dense_eigenvalues(Tc.to_dense(), cg.N);
    std::sort(cand.begin(), cand.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    cand.resize(std::min<std::size_t>(cand.size(), std::size_t(k) + 4));
    s.values_coarse = refine_candidates(TN, cand, k);
    s.values_fine = refine_candidates(T2, cand, k);
  }
  s.eigenvalues.resize(k);
  s.richardson_error.resize(k);
  for (int i = 0; i < k; ++i) {
    Complex d = s.values_fine[i] - s.values_coarse[i];
    s.eigenvalues[i] = s.values_fine[i] + d / 3.0;
    s.richardson_error[i] = std::abs(d) / 3.0;
  }
  return s;
}

double residual_norm(const SectorSolution& sol, const SectorProblem& prob,
                     std::optional<Complex> lambda) {
  using CL = std::complex<long double>;
  const Complex lam_d = lambda.value_or(sol.eigenvalue);
  const CL lam(lam_d.real(), lam_d.imag());

  const double lo = sol.x_lo, hi = sol.x_hi; // radial solutions carry a finite box
  const double L = hi - lo;
  const double wlo = lo + 0.05 * L, whi = hi - 0.05 * L;
  const int M = 601;

  auto res_at_step = [&](long double h) {
    long double num = 0.0L, den = 0.0L;
    for (int i = 0; i < M; ++i) {
      long double x = wlo + (whi - wlo) * (i + 0.5L) / M;
      CL f0 = sol.eval_ld(x);
      CL fp1 = sol.eval_ld(x + h), fm1 = sol.eval_ld(x - h);
      CL fp2 = sol.eval_ld(x + 2 * h), fm2 = sol.eval_ld(x - 2 * h);
      CL d2 = (-fp2 + 16.0L * fp1 - 30.0L * f0 + 16.0L * fm1 - fm2) / (12.0L * h * h);
      CL r = -d2 + (prob.effective_potential_ld(x) - lam) * f0;
      num += std::norm(r);
      den += std::norm(f0);
    }
    return double(std::sqrt(num / den));
  };

  long double h = (long double)(whi - wlo) / 1000.0L;
  double prev = res_at_step(h);
  double best = prev;
  for (int halvings = 0; halvings < 5; ++halvings) {
    h /= 2;
    double cur = res_at_step(h);
    best = std::min(best, cur);
    if (std::abs(prev - cur) <= 0.3 * std::max(cur, 1e-300)) return cur;
    if (cur > prev) return best; // entered the roundoff regime
    prev = cur;
  }
  return best;
}

Complex inner_product(const std::function<Complex(double)>& f,
                      const std::function<Complex(double)>& g,
                      const std::function<Complex(double)>& weight, double a, double b) {
  static const auto table = [] {
    std::pair<std::vector<double>, std::vector<double>> t;
    linalg::gauss_legendre(200, t.first, t.second);
    return t;
  }();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex acc(0.0);
  for (std::size_t i = 0; i < table.first.size(); ++i) {
    double x = mid + half * table.first[i];
    acc += table.second[i] * f(x) * g(x) * weight(x);
  }
  return half * acc;
}

int count_sign_changes(const SectorSolution& sol, int samples) {
  const double lo = sol.x_lo, hi = sol.x_hi;
  const double L = hi - lo;
  int changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  // fix the overall phase from the largest sample, then count real-axis crossings
  double big = 0.0;
  Complex phase(1.0);
  for (int i = 0; i < samples; ++i) {
    double x = lo + L * (i + 0.5) / samples;
    Complex v = sol.eval(x);
    if (std::abs(v) > big) {
      big = std::abs(v);
      phase = v / std::abs(v);
    }
  }
  for (int i = 0; i < samples; ++i) {
    double x = lo + L * (i + 0.5) / samples;
    double re = (sol.eval(x) / phase).real();
    if (std::abs(re) < 1e-9 * big) continue;
    if (have_prev && re * prev < 0.0) ++changes;
    prev = re;
    have_prev = true;
  }
  return changes;
}

Grid1D oracle_grid(const SectorProblem& prob, int N, int kmax) {
  Grid1D g;
  g.N = N;
  if (prob.sector == Sector::Radial) {
    g.a = 1e-4;
    g.b = radial_box(prob, kmax);
  } else {
    g.a = prob.x_lo + 1e-5;
    g.b = prob.x_hi - 1e-5;
  }
  return g;
}

} // namespace eop
