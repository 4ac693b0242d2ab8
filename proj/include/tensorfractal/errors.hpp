#pragma once

#include <stdexcept>
#include <string>

namespace tensorfractal {

// Base of every error the library throws. The CLI maps these onto a one-line
// diagnostic and a nonzero exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define TENSORFRACTAL_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                                 \
  public:                                                                     \
    using Error::Error;                                                       \
    const char* kind() const noexcept override { return #Name; }              \
  }

TENSORFRACTAL_DEFINE_ERROR(BudgetExceeded);
TENSORFRACTAL_DEFINE_ERROR(OrderMismatch);
TENSORFRACTAL_DEFINE_ERROR(NotBinary);
TENSORFRACTAL_DEFINE_ERROR(IndexOutOfRange);
TENSORFRACTAL_DEFINE_ERROR(InvalidShape);
TENSORFRACTAL_DEFINE_ERROR(RankChainBroken);
TENSORFRACTAL_DEFINE_ERROR(InvalidOrder);
TENSORFRACTAL_DEFINE_ERROR(UnknownName);
TENSORFRACTAL_DEFINE_ERROR(DegenerateSpec);
TENSORFRACTAL_DEFINE_ERROR(NonAlignedIfs);
TENSORFRACTAL_DEFINE_ERROR(ShapeNotPower);
TENSORFRACTAL_DEFINE_ERROR(IoError);
TENSORFRACTAL_DEFINE_ERROR(ParseError);
TENSORFRACTAL_DEFINE_ERROR(InvalidArgument);

#undef TENSORFRACTAL_DEFINE_ERROR

}  // namespace tensorfractal
