#include "eop/variants.hpp"

#include "eop/errors.hpp"

namespace eop {

bool VariantId::is_real() const {
  auto real_form = [](Form f) { return f == Form::I || f == Form::II; };
  if (dim == Dimension::Two) return real_form(phi_form);
  return real_form(theta_form) && real_form(phi_form);
}

std::string VariantId::name() const {
  if (dim == Dimension::Two) return to_string(phi_form);
  return to_string(theta_form) + ":" + to_string(phi_form);
}

std::vector<VariantId> list_variants(Dimension dim) {
  std::vector<VariantId> out;
  if (dim == Dimension::Two) {
    for (Form f : {Form::I, Form::II, Form::PT1, Form::PT2})
      out.push_back({dim, Form::I, f});
    return out;
  }
  for (Form t : {Form::I, Form::II, Form::PT1, Form::PT2})
    for (Form f : {Form::I, Form::II, Form::PT1}) out.push_back({dim, t, f});
  return out;
}

std::string to_string(Form f) {
  switch (f) {
    case Form::I: return "I";
    case Form::II: return "II";
    case Form::PT1: return "PT1";
    case Form::PT2: return "PT2";
  }
  return "?";
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::Radial: return "r";
    case Sector::Theta: return "theta";
    case Sector::Phi: return "phi";
  }
  return "?";
}

Form parse_form(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return Form::I;
  if (s == "II" || s == "ii" || s == "2") return Form::II;
  if (s == "PT1" || s == "pt1") return Form::PT1;
  if (s == "PT2" || s == "pt2") return Form::PT2;
  throw DomainError("unknown form '" + s + "' (expected I, II, PT1 or PT2)");
}

VariantId parse_variant(const std::string& s, Dimension dim) {
  VariantId v;
  v.dim = dim;
  auto colon = s.find(':');
  if (dim == Dimension::Two) {
    v.phi_form = parse_form(colon == std::string::npos ? s : s.substr(colon + 1));
    if (!valid_phi_form(v.phi_form, dim))
      throw DomainError("invalid 2D phi form '" + s + "'");
    return v;
  }
  if (colon == std::string::npos)
    throw DomainError("3D variant must be THETA:PHI, got '" + s + "'");
  v.theta_form = parse_form(s.substr(0, colon));
  v.phi_form = parse_form(s.substr(colon + 1));
  if (!valid_theta_form(v.theta_form) || !valid_phi_form(v.phi_form, dim))
    throw DomainError("invalid 3D variant '" + s + "'");
  return v;
}

bool valid_theta_form(Form) { return true; }

bool valid_phi_form(Form f, Dimension dim) {
  if (dim == Dimension::Two) return true;
  return f != Form::PT2; // the phi PT2 form is special to two dimensions
}

bool is_eckart_sector(Sector s, Form f, Dimension dim) {
  if (s == Sector::Theta && f == Form::PT1) return true;
  if (s == Sector::Phi && f == Form::PT2 && dim == Dimension::Two) return true;
  return false;
}

} // namespace eop
