#ifndef EOP_ERRORS_HPP
#define EOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eop {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain (non-finite input, delta_t <= 0, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A seed/denominator polynomial vanishes on the physical domain; names the
/// offending point. Signals an inadmissible parameter set.
struct SingularDenominatorError : Error {
  using Error::Error;
};

/// p must be odd for the II / PT forms of the phi sector.
struct ParityError : Error {
  using Error::Error;
};

/// Derived parameters violate the reality/positivity requirements of the form.
struct InadmissibleError : Error {
  using Error::Error;
};

/// A parameter combination makes a closed-form denominator vanish
/// (A-1+n = 0 and friends) or the requested bound state does not exist.
struct DegenerateError : Error {
  using Error::Error;
};

/// Collocation nullspace is not one-dimensional.
struct RankError : Error {
  using Error::Error;
};

/// An iterative solver exceeded its sweep cap.
struct ConvergenceError : Error {
  using Error::Error;
};

} // namespace eop

#endif
