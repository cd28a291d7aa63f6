#ifndef EOP_COEFFPOLY_HPP
#define EOP_COEFFPOLY_HPP

#include <vector>

#include "eop/scalar.hpp"

namespace eop {

/// Polynomial as an explicit complex coefficient vector, lowest degree first.
/// The zero polynomial is represented by {0}.
class CoeffPoly {
public:
  CoeffPoly() : c_{Complex(0.0)} {}
  explicit CoeffPoly(std::vector<Complex> coeffs);

  static CoeffPoly zero() { return CoeffPoly(); }
  static CoeffPoly one() { return CoeffPoly({Complex(1.0)}); }

  const std::vector<Complex>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero(double tol = 0.0) const;

  Complex eval(Complex z) const; // Horner
  Complex leading() const { return c_.back(); }

  CoeffPoly derivative() const;
  CoeffPoly& scale(Complex s);

  /// Drop a negligible leading tail (relative to the largest coefficient).
  CoeffPoly& trim(double rel_tol = 0.0);

  /// Coefficients of p(-z): flips the sign of odd-degree terms.
  CoeffPoly reflected() const;

  friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(Complex s, const CoeffPoly& a);

private:
  std::vector<Complex> c_;
};

} // namespace eop

#endif
