#include "eop/coeffpoly.hpp"

#include <algorithm>

#include "eop/errors.hpp"

namespace eop {

CoeffPoly::CoeffPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Complex(0.0));
  for (const Complex& v : c_)
    if (!is_finite(v)) throw DomainError("CoeffPoly: non-finite coefficient");
}

bool CoeffPoly::is_zero(double tol) const {
  for (const Complex& v : c_)
    if (abs1(v) > tol) return false;
  return true;
}

Complex CoeffPoly::eval(Complex z) const {
  Complex acc = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CoeffPoly CoeffPoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return CoeffPoly(std::move(d));
}

CoeffPoly& CoeffPoly::scale(Complex s) {
  for (Complex& v : c_) v *= s;
  return *this;
}

CoeffPoly& CoeffPoly::trim(double rel_tol) {
  double big = 0.0;
  for (const Complex& v : c_) big = std::max(big, abs1(v));
  double cut = big * rel_tol;
  while (c_.size() > 1 && abs1(c_.back()) <= cut) c_.pop_back();
  return *this;
}

CoeffPoly CoeffPoly::reflected() const {
  std::vector<Complex> r = c_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return CoeffPoly(std::move(r));
}

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()), Complex(0.0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return CoeffPoly(std::move(r));
}

CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) {
  return a + (Complex(-1.0) * b);
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return CoeffPoly(std::move(r));
}

CoeffPoly operator*(Complex s, const CoeffPoly& a) {
  CoeffPoly r = a;
  r.scale(s);
  return r;
}

} // namespace eop
