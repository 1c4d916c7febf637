#pragma once

#include <stdexcept>
#include <string>

namespace cubtors {

/// Base of every error raised by the library. The name() is the stable
/// error kind used in reports and tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CUBTORS_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what = "") : Error(#Name, what) {} \
  };

CUBTORS_DEFINE_ERROR(DivisionByZero)
CUBTORS_DEFINE_ERROR(InexactDivision)
CUBTORS_DEFINE_ERROR(NotSquarefree)
CUBTORS_DEFINE_ERROR(PrecisionExhausted)
CUBTORS_DEFINE_ERROR(Reducible)
CUBTORS_DEFINE_ERROR(DiscMismatch)
CUBTORS_DEFINE_ERROR(FieldMismatch)
CUBTORS_DEFINE_ERROR(NoGoodPrimes)
CUBTORS_DEFINE_ERROR(ReducibleModulus)
CUBTORS_DEFINE_ERROR(TooLarge)
CUBTORS_DEFINE_ERROR(SingularCurve)
CUBTORS_DEFINE_ERROR(RamifiedOrIndexPrime)
CUBTORS_DEFINE_ERROR(BadReduction)
CUBTORS_DEFINE_ERROR(NonIntegral)
CUBTORS_DEFINE_ERROR(HasseViolation)
CUBTORS_DEFINE_ERROR(PreconditionFailed)
CUBTORS_DEFINE_ERROR(ParseError)
CUBTORS_DEFINE_ERROR(SchemaError)
CUBTORS_DEFINE_ERROR(ValidationError)

#undef CUBTORS_DEFINE_ERROR

}  // namespace cubtors
