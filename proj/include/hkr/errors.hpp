#pragma once

#include <stdexcept>
#include <string>

namespace hkr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HKR_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

HKR_DEFINE_ERROR(SingularMatrix);
HKR_DEFINE_ERROR(NotInLattice);
HKR_DEFINE_ERROR(NoIntegralSolution);
HKR_DEFINE_ERROR(TooLarge);
HKR_DEFINE_ERROR(NotPPowerTuple);
HKR_DEFINE_ERROR(NotASubgroup);
HKR_DEFINE_ERROR(NotAHomomorphism);
HKR_DEFINE_ERROR(LevelMismatch);
HKR_DEFINE_ERROR(SectionOutOfRange);
HKR_DEFINE_ERROR(NoUnitCoefficient);
HKR_DEFINE_ERROR(NonIntegralCoefficient);
HKR_DEFINE_ERROR(ParseError);
HKR_DEFINE_ERROR(InvalidArgument);

#undef HKR_DEFINE_ERROR

}  // namespace hkr
