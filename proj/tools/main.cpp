#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eop/eop.hpp"
#include "runconfig.hpp"
#include "verifysuite.hpp"

namespace {

using eop::Complex;
using eop::Dimension;
using eop::Grid1D;
using eop::PotentialSpec;
using eop::VariantId;
using eoptool::CheckResult;
using eoptool::format_double;
using eoptool::RunConfig;
using nlohmann::json;

constexpr int kExitOk = 0, kExitVerifyFail = 1, kExitBadConfig = 2;

struct Staging {
  std::optional<int> dim;
  std::optional<std::string> variant, out, format, only, cut;
  std::optional<double> omega, delta, C, D, G, F, tol_scale;
  std::optional<int> p, m1, m2, m3, nmax, grid_n, samples;
  std::optional<unsigned long> seed;
  std::string config_path;

  RunConfig merge() const {
    RunConfig c;
    if (!config_path.empty()) c = RunConfig::from_file(config_path);
    auto ov = [](auto& dst, const auto& src) {
      if (src) dst = *src;
    };
    ov(c.dim, dim);
    ov(c.variant, variant);
    ov(c.out, out);
    ov(c.format, format);
    ov(c.only, only);
    ov(c.cut, cut);
    ov(c.omega, omega);
    ov(c.delta, delta);
    ov(c.C, C);
    ov(c.D, D);
    ov(c.G, G);
    ov(c.F, F);
    ov(c.tol_scale, tol_scale);
    ov(c.p, p);
    ov(c.m1, m1);
    ov(c.m2, m2);
    ov(c.m3, m3);
    ov(c.nmax, nmax);
    ov(c.grid_n, grid_n);
    ov(c.samples, samples);
    ov(c.seed, seed);
    return c;
  }
};

void add_common_flags(CLI::App* cmd, Staging& st) {
  cmd->add_option("--config", st.config_path, "JSON config file (flags override it)");
  cmd->add_option("--dim", st.dim, "dimension (2 or 3)");
  cmd->add_option("--variant", st.variant, "variant THETA:PHI (3D) or PHI (2D)");
  cmd->add_option("--omega", st.omega, "oscillator strength");
  cmd->add_option("--delta", st.delta, "radial 1/r^2 strength");
  cmd->add_option("--C", st.C, "theta cosec^2 strength");
  cmd->add_option("--D", st.D, "theta partner strength");
  cmd->add_option("--G", st.G, "phi cosec^2 strength");
  cmd->add_option("--F", st.F, "phi partner strength");
  cmd->add_option("--p", st.p, "phi frequency (odd for forms II/PT)");
  cmd->add_option("--m1", st.m1, "radial extension index");
  cmd->add_option("--m2", st.m2, "theta extension index");
  cmd->add_option("--m3", st.m3, "phi extension index");
  cmd->add_option("--nmax", st.nmax, "largest quantum number");
  cmd->add_option("--grid-n", st.grid_n, "oracle grid size N (paired with 2N)");
  cmd->add_option("--out", st.out, "output path (default: stdout)");
  cmd->add_option("--format", st.format, "csv or json");
  cmd->add_option("--seed", st.seed, "seed for randomized property checks");
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty())
    std::cout << content;
  else
    eoptool::atomic_write(cfg.out, content);
}

// ---------------------------------------------------------------- list ----
int cmd_list(const RunConfig& cfg, bool have_dim, const std::string& reality) {
  std::ostringstream os;
  os << "variant    dim  reality\n";
  int rows = 0;
  for (Dimension d : {Dimension::Three, Dimension::Two}) {
    if (have_dim && ((cfg.dim == 2) != (d == Dimension::Two))) continue;
    for (const VariantId& v : eop::list_variants(d)) {
      std::string r = v.is_real() ? "real" : "pt_complex";
      if (!reality.empty() && r != reality) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%-10s %-4s %s\n", v.name().c_str(),
                    d == Dimension::Two ? "2" : "3", r.c_str());
      os << buf;
      ++rows;
    }
  }
  os << rows << " variants\n";
  emit(cfg, os.str());
  return kExitOk;
}

// ------------------------------------------------------------ spectrum ----
struct SpectrumRow {
  int n1 = 0, n2 = -1, n3 = 0;
  Complex msq, msq_num, ellsq, ellsq_num, E, E_num;
  double msq_err = 0, ellsq_err = 0, E_err = 0;
};

int cmd_spectrum(const RunConfig& cfg) {
  PotentialSpec spec = cfg.to_spec();
  spec.validate();
  const bool is3d = spec.variant.dim == Dimension::Three;
  const int nmax = std::min(cfg.nmax, 6);
  const int k = nmax + 1;

  auto phi = eop::make_phi_problem(spec);
  eop::check_admissible(phi);
  Grid1D gphi = eop::oracle_grid(phi, cfg.grid_n, k + phi.m);
  eop::GridSpectrum sphi = eop::numeric_spectrum(
      [&phi](double x) { return phi.effective_potential(x); }, gphi, k);

  std::vector<SpectrumRow> rows;
  for (int n3 = 0; n3 <= nmax; ++n3) {
    Complex msq = phi.eigenvalue(n3);
    if (is3d) {
      auto th = eop::make_theta_problem(spec, msq);
      eop::check_admissible(th);
      eop::GridSpectrum sth = eop::numeric_spectrum(
          [&th](double x) { return th.effective_potential(x); },
          eop::oracle_grid(th, cfg.grid_n, k + th.m), k);
      for (int n2 = 0; n2 <= nmax; ++n2) {
        Complex ell = th.eigenvalue(n2);
        auto rad = eop::make_radial_problem(spec, ell);
        eop::check_admissible(rad);
        eop::GridSpectrum srad = eop::numeric_spectrum(
            [&rad](double x) { return rad.effective_potential(x); },
            eop::oracle_grid(rad, cfg.grid_n, k + rad.m), k);
        for (int n1 = 0; n1 <= nmax; ++n1) {
          SpectrumRow r;
          r.n1 = n1;
          r.n2 = n2;
          r.n3 = n3;
          r.msq = msq;
          r.msq_num = sphi.eigenvalues[n3];
          r.msq_err = sphi.richardson_error[n3];
          r.ellsq = ell;
          r.ellsq_num = sth.eigenvalues[n2];
          r.ellsq_err = sth.richardson_error[n2];
          r.E = rad.eigenvalue(n1);
          r.E_num = srad.eigenvalues[n1];
          r.E_err = srad.richardson_error[n1];
          rows.push_back(r);
        }
      }
    } else {
      auto rad = eop::make_radial_problem(spec, msq);
      eop::check_admissible(rad);
      eop::GridSpectrum srad = eop::numeric_spectrum(
          [&rad](double x) { return rad.effective_potential(x); },
          eop::oracle_grid(rad, cfg.grid_n, k + rad.m), k);
      for (int n1 = 0; n1 <= nmax; ++n1) {
        SpectrumRow r;
        r.n1 = n1;
        r.n3 = n3;
        r.msq = msq;
        r.msq_num = sphi.eigenvalues[n3];
        r.msq_err = sphi.richardson_error[n3];
        r.E = rad.eigenvalue(n1);
        r.E_num = srad.eigenvalues[n1];
        r.E_err = srad.richardson_error[n1];
        rows.push_back(r);
      }
    }
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    json j;
    j["variant"] = spec.variant.name();
    j["dim"] = is3d ? 3 : 2;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["n1"] = r.n1;
      if (is3d) row["n2"] = r.n2;
      row["n3"] = r.n3;
      row["msq_re"] = r.msq.real();
      row["msq_im"] = r.msq.imag();
      row["msq_num_re"] = r.msq_num.real();
      row["msq_num_im"] = r.msq_num.imag();
      row["msq_richardson"] = r.msq_err;
      if (is3d) {
        row["l2_re"] = r.ellsq.real();
        row["l2_im"] = r.ellsq.imag();
        row["l2_num_re"] = r.ellsq_num.real();
        row["l2_num_im"] = r.ellsq_num.imag();
        row["l2_richardson"] = r.ellsq_err;
      }
      row["E"] = r.E.real();
      row["E_num_re"] = r.E_num.real();
      row["E_num_im"] = r.E_num.imag();
      row["E_richardson"] = r.E_err;
      j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "# units: hbar = 2m = 1; all eigenvalues dimensionless\n";
    if (is3d)
      os << "n1,n2,n3,msq_re,msq_im,msq_num_re,msq_num_im,msq_richardson,"
            "l2_re,l2_im,l2_num_re,l2_num_im,l2_richardson,E,E_num_re,E_num_im,E_richardson\n";
    else
      os << "n1,n3,msq_re,msq_im,msq_num_re,msq_num_im,msq_richardson,E,E_num_re,E_num_im,"
            "E_richardson\n";
    for (const auto& r : rows) {
      std::vector<double> cols;
      if (is3d)
        cols = {double(r.n1), double(r.n2), double(r.n3),
                r.msq.real(), r.msq.imag(), r.msq_num.real(), r.msq_num.imag(), r.msq_err,
                r.ellsq.real(), r.ellsq.imag(), r.ellsq_num.real(), r.ellsq_num.imag(),
                r.ellsq_err, r.E.real(), r.E_num.real(), r.E_num.imag(), r.E_err};
      else
        cols = {double(r.n1), double(r.n3),
                r.msq.real(), r.msq.imag(), r.msq_num.real(), r.msq_num.imag(), r.msq_err,
                r.E.real(), r.E_num.real(), r.E_num.imag(), r.E_err};
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << format_double(cols[i]);
      os << "\n";
    }
  }
  emit(cfg, os.str());
  return kExitOk;
}

// -------------------------------------------------------------- sample ----
int cmd_sample(const RunConfig& cfg) {
  PotentialSpec spec = cfg.to_spec();
  spec.validate();
  const bool is3d = spec.variant.dim == Dimension::Three;
  const int n = std::max(cfg.samples, 16);

  std::ostringstream os;
  os << "# units: hbar = 2m = 1\n";
  if (is3d) {
    eop::Potential3D V(spec);
    eop::FullSolution fs = eop::solve_3d(spec, 0, 0, 0);
    double rmax = fs.radial.x_hi;
    double th_lo = V.theta_problem().x_lo + 1e-3, th_hi = V.theta_problem().x_hi - 1e-3;
    double ph_lo = V.phi_problem().x_lo + 1e-3 / spec.p,
           ph_hi = V.phi_problem().x_hi - 1e-3 / spec.p;
    double r0 = 0.35 * rmax, th0 = 0.5 * (th_lo + th_hi), ph0 = 0.5 * (ph_lo + ph_hi);
    os << "r,theta,phi,V_re,V_im,psi_re,psi_im\n";
    for (int i = 0; i < n; ++i) {
      double r = r0, th = th0, ph = ph0;
      double t = (i + 0.5) / n;
      if (cfg.cut == "theta")
        th = th_lo + (th_hi - th_lo) * t;
      else if (cfg.cut == "phi")
        ph = ph_lo + (ph_hi - ph_lo) * t;
      else
        r = 0.02 * rmax + (0.75 * rmax) * t;
      Complex v = V(r, th, ph);
      Complex psi = fs.psi(r, th, ph);
      for (double c : {r, th, ph, v.real(), v.imag(), psi.real(), psi.imag()})
        os << format_double(c) << (c == psi.imag() ? "" : ",");
      os << "\n";
    }
  } else {
    eop::Potential2D V(spec);
    eop::FullSolution fs = eop::solve_2d(spec, 0, 0);
    double rmax = fs.radial.x_hi;
    double ph_lo = V.phi_problem().x_lo + 1e-3 / spec.p,
           ph_hi = V.phi_problem().x_hi - 1e-3 / spec.p;
    double r0 = 0.35 * rmax, ph0 = 0.5 * (ph_lo + ph_hi);
    os << "r,phi,V_re,V_im,psi_re,psi_im\n";
    for (int i = 0; i < n; ++i) {
      double r = r0, ph = ph0;
      double t = (i + 0.5) / n;
      if (cfg.cut == "phi")
        ph = ph_lo + (ph_hi - ph_lo) * t;
      else
        r = 0.02 * rmax + (0.75 * rmax) * t;
      Complex v = V(r, ph);
      Complex psi = fs.psi(r, ph);
      std::vector<double> cols = {r, ph, v.real(), v.imag(), psi.real(), psi.imag()};
      for (std::size_t i2 = 0; i2 < cols.size(); ++i2)
        os << (i2 ? "," : "") << format_double(cols[i2]);
      os << "\n";
    }
  }
  emit(cfg, os.str());
  return kExitOk;
}

// -------------------------------------------------------------- verify ----
int cmd_verify(const RunConfig& cfg, const std::string& variant_filter) {
  eoptool::SuiteOptions opts;
  opts.base = cfg.to_spec();
  opts.grid_n = cfg.grid_n;
  opts.nmax = cfg.nmax >= 1 ? cfg.nmax : 3;
  opts.seed = cfg.seed;
  opts.tol_scale = cfg.tol_scale;
  opts.only = cfg.only;
  opts.variant_filter = variant_filter;

  std::vector<CheckResult> results = eoptool::run_suite(opts);
  int failed = 0;
  json report;
  report["checks"] = json::array();
  for (const CheckResult& c : results) {
    if (!c.pass) ++failed;
    json j;
    j["suite"] = c.suite;
    j["subject"] = c.subject;
    j["status"] = c.pass ? "pass" : "fail";
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    j["note"] = c.note;
    j["runtime_s"] = c.runtime_s;
    if (c.strict_vs_m0 >= 0.0) j["strict_vs_m0"] = c.strict_vs_m0;
    report["checks"].push_back(j);
  }
  report["passed"] = int(results.size()) - failed;
  report["failed"] = failed;

  std::ostringstream human;
  for (const CheckResult& c : results) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "[%s] %-15s %-40s measured %.3e tol %.3e %s\n",
                  c.pass ? "PASS" : "FAIL", c.suite.c_str(), c.subject.c_str(), c.measured,
                  c.tolerance, c.note.c_str());
    human << buf;
  }
  human << results.size() - failed << " passed, " << failed << " failed\n";
  std::cout << human.str();
  if (!cfg.out.empty()) eoptool::atomic_write(cfg.out, report.dump(2) + "\n");
  return failed == 0 ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"rationally extended non-central potentials: spectra, closed-form "
               "eigenfunctions and their numerical verification"};
  app.require_subcommand(1);

  Staging st_list, st_spec, st_sample, st_verify;
  std::string reality_filter, variant_filter;

  CLI::App* c_list = app.add_subcommand("list", "enumerate the potential variants");
  add_common_flags(c_list, st_list);
  c_list->add_option("--reality", reality_filter, "filter: real | pt_complex");

  CLI::App* c_spec = app.add_subcommand("spectrum", "tabulate analytic vs numeric spectra");
  add_common_flags(c_spec, st_spec);

  CLI::App* c_sample = app.add_subcommand("sample", "sample potential and wavefunction cuts");
  add_common_flags(c_sample, st_sample);
  c_sample->add_option("--cut", st_sample.cut, "cut coordinate: r | theta | phi");
  c_sample->add_option("--samples", st_sample.samples, "number of samples");

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suite");
  add_common_flags(c_verify, st_verify);
  c_verify->add_option("--only", st_verify.only,
                       "one of: chain, isospectrality, residual, reality, orthogonality");
  c_verify->add_option("--variant-filter", variant_filter,
                       "variant name or sector filter (e.g. I:I, theta:PT1, phi:II)");
  c_verify->add_option("--tol-scale", st_verify.tol_scale, "scale all tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (c_list->parsed()) return cmd_list(st_list.merge(), bool(st_list.dim), reality_filter);
    if (c_spec->parsed()) return cmd_spectrum(st_spec.merge());
    if (c_sample->parsed()) return cmd_sample(st_sample.merge());
    if (c_verify->parsed()) return cmd_verify(st_verify.merge(), variant_filter);
  } catch (const eop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;
}
