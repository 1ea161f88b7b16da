#pragma once

#include <stdexcept>
#include <string>

namespace appell {

// Base for every error raised by the library. The CLI maps these to exit
// code 2 (usage / precondition), never to 1 (verification failure).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define APPELL_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

APPELL_DEFINE_ERROR(InvalidParams);
APPELL_DEFINE_ERROR(NonUnitConstantTerm);
APPELL_DEFINE_ERROR(InvalidExponent);
APPELL_DEFINE_ERROR(EvenInput);
APPELL_DEFINE_ERROR(CounterOverflow);
APPELL_DEFINE_ERROR(CapacityExceeded);
APPELL_DEFINE_ERROR(InvalidInterval);
APPELL_DEFINE_ERROR(PreconditionUnmet);
APPELL_DEFINE_ERROR(DomainError);
APPELL_DEFINE_ERROR(BudgetExceeded);

#undef APPELL_DEFINE_ERROR

} // namespace appell
