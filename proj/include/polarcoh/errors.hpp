#ifndef POLARCOH_ERRORS_HPP
#define POLARCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarcoh {

// Every failure raised by the library derives from Error, so callers can
// separate bad input from internal faults with a single catch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLARCOH_DEFINE_ERROR(Name)      \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

POLARCOH_DEFINE_ERROR(DomainError);            // value outside the domain of an operation
POLARCOH_DEFINE_ERROR(ShapeError);             // matrix/vector dimensions or index ranges
POLARCOH_DEFINE_ERROR(ValidityError);          // structurally invalid model or polynomial
POLARCOH_DEFINE_ERROR(SingularActionError);    // P(0) = 0, i.e. a non-invertible action
POLARCOH_DEFINE_ERROR(InconsistencyError);     // data contradicts a derived identity
POLARCOH_DEFINE_ERROR(ConsistencyError);       // supplied matrix and polynomial disagree
POLARCOH_DEFINE_ERROR(PreconditionError);
POLARCOH_DEFINE_ERROR(InapplicableModelError);
POLARCOH_DEFINE_ERROR(NumericError);
POLARCOH_DEFINE_ERROR(EmptyPolygonError);
POLARCOH_DEFINE_ERROR(ParseError);

#undef POLARCOH_DEFINE_ERROR

// b_i != b_{2d-i}
class DualityViolationError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

}  // namespace polarcoh

#endif  // POLARCOH_ERRORS_HPP
