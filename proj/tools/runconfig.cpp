#include "runconfig.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eop/errors.hpp"
#include "json.hpp"

namespace eoptool {

using nlohmann::json;

eop::PotentialSpec RunConfig::to_spec() const {
  eop::PotentialSpec s;
  s.omega = omega;
  s.delta = delta;
  s.C = C;
  s.D = D;
  s.G = G;
  s.F = F;
  s.p = p;
  s.m1 = m1;
  s.m2 = m2;
  s.m3 = m3;
  eop::Dimension d = (dim == 2) ? eop::Dimension::Two : eop::Dimension::Three;
  s.variant = eop::parse_variant(variant, d);
  return s;
}

std::string RunConfig::to_json() const {
  json j;
  j["dim"] = dim;
  j["variant"] = variant;
  j["omega"] = omega;
  j["delta"] = delta;
  j["C"] = C;
  j["D"] = D;
  j["G"] = G;
  j["F"] = F;
  j["p"] = p;
  j["m1"] = m1;
  j["m2"] = m2;
  j["m3"] = m3;
  j["nmax"] = nmax;
  j["grid_n"] = grid_n;
  j["out"] = out;
  j["format"] = format;
  j["only"] = only;
  j["cut"] = cut;
  j["samples"] = samples;
  j["seed"] = seed;
  j["tol_scale"] = tol_scale;
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  json j = json::parse(text);
  RunConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("dim", c.dim);
  get("variant", c.variant);
  get("omega", c.omega);
  get("delta", c.delta);
  get("C", c.C);
  get("D", c.D);
  get("G", c.G);
  get("F", c.F);
  get("p", c.p);
  get("m1", c.m1);
  get("m2", c.m2);
  get("m3", c.m3);
  get("nmax", c.nmax);
  get("grid_n", c.grid_n);
  get("out", c.out);
  get("format", c.format);
  get("only", c.only);
  get("cut", c.cut);
  get("samples", c.samples);
  get("seed", c.seed);
  get("tol_scale", c.tol_scale);
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw eop::DomainError("config file not readable: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw eop::DomainError("cannot open for writing: " + tmp);
    f << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw eop::DomainError("rename failed for " + path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace eoptool
