#include "eop/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eop/errors.hpp"

namespace eop::linalg {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// complex Givens: c real, s complex with [c, s; -conj(s), c] [a; b] = [r; 0]
void givens(Complex a, Complex b, double& c, Complex& s, Complex& r) {
  double na = std::abs(a), nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = Complex(0.0);
    r = a;
    return;
  }
  if (na == 0.0) {
    c = 0.0;
    s = Complex(1.0);
    r = b;
    return;
  }
  double n = hypot2(na, nb);
  c = na / n;
  s = (a / na) * std::conj(b) / n;
  r = (a / na) * n;
}

} // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

std::vector<double> symtridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  e.resize(n, 0.0); // e[i] couples i and i+1; e[n-1] unused
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw ConvergenceError("symtridiag_eigenvalues: QL did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = hypot2(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = hypot2(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          goto next_sweep;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    next_sweep:;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Complex> dense_eigenvalues(std::vector<Complex> a, int n, int sweep_cap) {
  auto at = [&](int i, int j) -> Complex& { return a[i * n + j]; };
  // Householder reduction to upper Hessenberg
  for (int k = 0; k < n - 2; ++k) {
    double col = 0.0;
    for (int i = k + 1; i < n; ++i) col += std::norm(at(i, k));
    double below = col - std::norm(at(k + 1, k));
    if (below <= 1e-300 * col) continue;
    std::vector<Complex> v(n, Complex(0.0));
    Complex x0 = at(k + 1, k);
    double xn = std::sqrt(col);
    Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0);
    Complex alpha = -phase * xn;
    v[k + 1] = x0 - alpha;
    for (int i = k + 2; i < n; ++i) v[i] = at(i, k);
    double vn2 = 0.0;
    for (int i = k + 1; i < n; ++i) vn2 += std::norm(v[i]);
    if (vn2 <= 0.0) continue;
    // A <- (I - 2 v v^H / v^H v) A (I - 2 v v^H / v^H v)
    for (int j = k; j < n; ++j) {
      Complex s(0.0);
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * at(i, j);
      s *= 2.0 / vn2;
      for (int i = k + 1; i < n; ++i) at(i, j) -= s * v[i];
    }
    for (int i = 0; i < n; ++i) {
      Complex s(0.0);
      for (int j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      s *= 2.0 / vn2;
      for (int j = k + 1; j < n; ++j) at(i, j) -= s * std::conj(v[j]);
    }
    for (int i = k + 2; i < n; ++i) at(i, k) = Complex(0.0);
  }

  std::vector<Complex> ev(n);
  int hi = n - 1;
  int since_deflation = 0;
  std::vector<double> cs(n);
  std::vector<Complex> sn(n);
  while (hi >= 0) {
    if (hi == 0) {
      ev[0] = at(0, 0);
      break;
    }
    // deflation scan
    int lo = hi;
    while (lo > 0) {
      double off = std::abs(at(lo, lo - 1));
      if (off <= 1e-16 * (std::abs(at(lo - 1, lo - 1)) + std::abs(at(lo, lo)))) {
        at(lo, lo - 1) = Complex(0.0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      ev[hi] = at(hi, hi);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++since_deflation > sweep_cap)
      throw ConvergenceError("dense_eigenvalues: QR sweep cap exceeded");
    // Wilkinson shift from the trailing 2x2 of the active block
    Complex h00 = at(hi - 1, hi - 1), h01 = at(hi - 1, hi);
    Complex h10 = at(hi, hi - 1), h11 = at(hi, hi);
    Complex tr2 = (h00 + h11) / 2.0;
    Complex disc = std::sqrt((h00 - h11) * (h00 - h11) / 4.0 + h01 * h10);
    Complex mu1 = tr2 + disc, mu2 = tr2 - disc;
    Complex shift = (std::abs(mu1 - h11) < std::abs(mu2 - h11)) ? mu1 : mu2;
    // explicit shifted QR on rows lo..hi
    for (int i = lo; i <= hi; ++i) at(i, i) -= shift;
    for (int i = lo; i < hi; ++i) {
      Complex r;
      givens(at(i, i), at(i + 1, i), cs[i], sn[i], r);
      at(i, i) = r;
      at(i + 1, i) = Complex(0.0);
      for (int j = i + 1; j <= hi; ++j) {
        Complex t1 = at(i, j), t2 = at(i + 1, j);
        at(i, j) = cs[i] * t1 + sn[i] * t2;
        at(i + 1, j) = -std::conj(sn[i]) * t1 + cs[i] * t2;
      }
    }
    for (int i = lo; i < hi; ++i) {
      // RQ: apply the conjugate rotation on columns i, i+1
      int top = lo;
      for (int r2 = top; r2 <= std::min(i + 1, hi); ++r2) {
        Complex t1 = at(r2, i), t2 = at(r2, i + 1);
        at(r2, i) = cs[i] * t1 + std::conj(sn[i]) * t2;
        at(r2, i + 1) = -sn[i] * t1 + cs[i] * t2;
      }
    }
    for (int i = lo; i <= hi; ++i) at(i, i) += shift;
  }
  return ev;
}

Svd svd_jacobi(std::vector<Complex> m, int rows, int cols) {
  auto at = [&](int i, int j) -> Complex& { return m[i * cols + j]; };
  Svd out;
  out.cols = cols;
  out.v.assign(std::size_t(cols) * cols, Complex(0.0));
  for (int i = 0; i < cols; ++i) out.v[i * cols + i] = Complex(1.0);

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool converged = true;
    for (int i = 0; i < cols - 1; ++i) {
      for (int j = i + 1; j < cols; ++j) {
        double aa = 0.0, bb = 0.0;
        Complex cc(0.0);
        for (int r = 0; r < rows; ++r) {
          aa += std::norm(at(r, i));
          bb += std::norm(at(r, j));
          cc += std::conj(at(r, i)) * at(r, j);
        }
        double nc = std::abs(cc);
        if (nc <= 1e-30 || nc <= 1e-16 * std::sqrt(aa * bb)) continue;
        converged = false;
        double tau = (bb - aa) / (2.0 * nc);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        Complex phase = cc / nc;
        for (int r = 0; r < rows; ++r) {
          Complex mi = at(r, i), mj = at(r, j);
          at(r, i) = c * mi - s * std::conj(phase) * mj;
          at(r, j) = s * phase * mi + c * mj;
        }
        for (int r = 0; r < cols; ++r) {
          Complex vi = out.v[r * cols + i], vj = out.v[r * cols + j];
          out.v[r * cols + i] = c * vi - s * std::conj(phase) * vj;
          out.v[r * cols + j] = s * phase * vi + c * vj;
        }
      }
    }
    if (converged) break;
  }
  out.sigma.assign(cols, 0.0);
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  for (int j = 0; j < cols; ++j) {
    double s2 = 0.0;
    for (int r = 0; r < rows; ++r) s2 += std::norm(at(r, j));
    out.sigma[j] = std::sqrt(s2);
  }
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return out.sigma[x] > out.sigma[y]; });
  std::vector<double> sig(cols);
  std::vector<Complex> vv(out.v.size());
  for (int j = 0; j < cols; ++j) {
    sig[j] = out.sigma[order[j]];
    for (int r = 0; r < cols; ++r) vv[r * cols + j] = out.v[r * cols + order[j]];
  }
  out.sigma = std::move(sig);
  out.v = std::move(vv);
  return out;
}

Complex tridiag_rqi(const std::vector<Complex>& diag, double off, Complex shift,
                    int max_iter, double tol, bool* converged) {
  // fixed-shift inverse iteration (the shift is a coarse-grid candidate close
  // to exactly one eigenvalue; Rayleigh shift updates can wander between
  // neighbouring states, so the factorization shift stays put and only the
  // bilinear quotient is tracked)
  const int n = static_cast<int>(diag.size());
  if (converged) *converged = false;
  std::vector<Complex> x(n);
  for (int i = 0; i < n; ++i) x[i] = Complex(std::sin(kPi * (i + 1) / (n + 1.0)), 0.0);
  Complex mu = shift;
  std::vector<Complex> dl(n), dd(n), du(n), du2(n), b(n);
  Complex mu_prev = mu + 1.0;
  double norm_t = 2.0 * std::abs(off);
  for (const Complex& d : diag) norm_t = std::max(norm_t, std::abs(d));
  const double floor_tol = 64.0 * 2.22e-16 * norm_t; // quotient roundoff floor
  for (int it = 0; it < max_iter; ++it) {
    // pivoted LU of (T - shift I)
    for (int i = 0; i < n; ++i) {
      dd[i] = diag[i] - shift;
      dl[i] = (i > 0) ? Complex(off) : Complex(0.0);
      du[i] = (i < n - 1) ? Complex(off) : Complex(0.0);
      du2[i] = Complex(0.0);
    }
    b = x;
    // forward elimination with partial pivoting
    for (int i = 0; i < n - 1; ++i) {
      if (std::abs(dd[i]) < std::abs(dl[i + 1])) {
        std::swap(dd[i], dl[i + 1]); // note: dl[i+1] holds row i+1's sub entry
        std::swap(du[i], dd[i + 1]);
        if (i < n - 2) std::swap(du2[i], du[i + 1]);
        std::swap(b[i], b[i + 1]);
      }
      if (std::abs(dd[i]) < 1e-300) dd[i] = Complex(1e-300);
      Complex f = dl[i + 1] / dd[i];
      dd[i + 1] -= f * du[i];
      if (i < n - 2) du[i + 1] -= f * du2[i];
      b[i + 1] -= f * b[i];
    }
    if (std::abs(dd[n - 1]) < 1e-300) dd[n - 1] = Complex(1e-300);
    // back substitution
    x[n - 1] = b[n - 1] / dd[n - 1];
    if (n >= 2) x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
    for (int i = n - 3; i >= 0; --i)
      x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
    double nx = 0.0;
    for (int i = 0; i < n; ++i) nx = std::max(nx, std::abs(x[i]));
    if (!(nx > 0.0) || !std::isfinite(nx)) break;
    for (int i = 0; i < n; ++i) x[i] /= nx;
    // bilinear Rayleigh quotient (left eigenvector of a complex symmetric
    // tridiagonal is the unconjugated right one)
    Complex num(0.0), den(0.0);
    for (int i = 0; i < n; ++i) {
      Complex tx = diag[i] * x[i];
      if (i > 0) tx += off * x[i - 1];
      if (i < n - 1) tx += off * x[i + 1];
      num += x[i] * tx;
      den += x[i] * x[i];
    }
    if (std::abs(den) < 1e-14) {
      // quasi-null bilinear norm: fall back to the conjugated quotient
      num = Complex(0.0);
      double dr = 0.0;
      for (int i = 0; i < n; ++i) {
        Complex tx = diag[i] * x[i];
        if (i > 0) tx += off * x[i - 1];
        if (i < n - 1) tx += off * x[i + 1];
        num += std::conj(x[i]) * tx;
        dr += std::norm(x[i]);
      }
      mu_prev = mu;
      mu = num / dr;
    } else {
      mu_prev = mu;
      mu = num / den;
    }
    if (std::abs(mu - mu_prev) <= std::max(tol * (1.0 + std::abs(mu)), floor_tol)) {
      if (converged) *converged = true;
      return mu;
    }
  }
  return mu;
}

} // namespace eop::linalg
