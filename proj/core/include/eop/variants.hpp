#ifndef EOP_VARIANTS_HPP
#define EOP_VARIANTS_HPP

#include <string>
#include <vector>

namespace eop {

enum class Sector { Radial, Theta, Phi };
enum class Form { I, II, PT1, PT2 };
enum class Dimension { Two, Three };

/// Which theta/phi form a separated 1D problem uses. The radial sector has a
/// single form and ignores `form`.
struct SectorVariant {
  Sector sector = Sector::Radial;
  Form form = Form::I;
  Dimension dimension = Dimension::Three;
};

/// One of the 12 three-dimensional or 4 two-dimensional potential variants.
/// In 2D only phi_form is meaningful.
struct VariantId {
  Dimension dim = Dimension::Three;
  Form theta_form = Form::I; // 3D only
  Form phi_form = Form::I;

  bool is_real() const;
  std::string name() const; // "I:I", "PT1:II", ... ; 2D: "I", "PT2"
};

/// All valid variants: 3D = {I,II,PT1,PT2} x {I,II,PT1} (12), 2D = {I,II,PT1,PT2} (4).
std::vector<VariantId> list_variants(Dimension dim);

std::string to_string(Form f);
std::string to_string(Sector s);
Form parse_form(const std::string& s);
VariantId parse_variant(const std::string& s, Dimension dim);

/// Theta forms admit {I,II,PT1,PT2}; 3D phi forms admit {I,II,PT1};
/// 2D phi forms admit {I,II,PT1,PT2}.
bool valid_theta_form(Form f);
bool valid_phi_form(Form f, Dimension dim);

/// Eckart-type sectors (theta PT1, 2D phi PT2) use the new-polynomial
/// machinery and the shifted state indexing.
bool is_eckart_sector(Sector s, Form f, Dimension dim);

} // namespace eop

#endif
