#pragma once

#include <stdexcept>
#include <string>

namespace relax {

#define RELAX_DEFINE_ERROR(Name)                          \
  class Name : public std::runtime_error {                \
   public:                                                \
    explicit Name(const std::string& msg)                 \
        : std::runtime_error(std::string(#Name ": ") + msg) {} \
  }

RELAX_DEFINE_ERROR(AdversaryOutOfDomain);
RELAX_DEFINE_ERROR(LearnerOutOfDomain);
RELAX_DEFINE_ERROR(NoClosedForm);
RELAX_DEFINE_ERROR(InfeasibleOptimization);
RELAX_DEFINE_ERROR(TooLarge);
RELAX_DEFINE_ERROR(TooDeep);
RELAX_DEFINE_ERROR(Unsolvable);
RELAX_DEFINE_ERROR(EmptyHistory);
RELAX_DEFINE_ERROR(SolverFailure);
RELAX_DEFINE_ERROR(ConstraintViolated);
RELAX_DEFINE_ERROR(DomainError);
RELAX_DEFINE_ERROR(ConfigError);
RELAX_DEFINE_ERROR(UnknownBound);
RELAX_DEFINE_ERROR(InvalidBlocking);
RELAX_DEFINE_ERROR(NoConvergence);
RELAX_DEFINE_ERROR(DegenerateProjection);

#undef RELAX_DEFINE_ERROR

}  // namespace relax
