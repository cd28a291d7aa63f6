#ifndef EOP_TOOLS_RUNCONFIG_HPP
#define EOP_TOOLS_RUNCONFIG_HPP

#include <string>

#include "eop/params.hpp"
#include "eop/variants.hpp"

namespace eoptool {

/// Flat run configuration; JSON file fields and CLI flags map 1:1, flags win.
struct RunConfig {
  int dim = 3;
  std::string variant = "I:I";
  double omega = 1.0, delta = 0.3, C = 2.0, D = 1.2, G = 1.5, F = 0.9;
  int p = 1;
  int m1 = 0, m2 = 0, m3 = 0;
  int nmax = 2;
  int grid_n = 2000;
  std::string out;
  std::string format = "csv"; // csv | json
  std::string only;
  std::string cut = "r"; // sample subcommand: r | theta | phi
  int samples = 400;
  unsigned long seed = 12345;
  double tol_scale = 1.0;

  eop::PotentialSpec to_spec() const;
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  static RunConfig from_file(const std::string& path);
};

/// write-temp-then-rename
void atomic_write(const std::string& path, const std::string& content);

std::string format_double(double v); // fixed 17-significant-digit form

} // namespace eoptool

#endif
