#pragma once

#include <stdexcept>
#include <string>

namespace asymp {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ASYMP_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what = #Name) : Error(what) {}    \
    }

ASYMP_DEFINE_ERROR(InvalidArgument);
ASYMP_DEFINE_ERROR(NonConvergence);
ASYMP_DEFINE_ERROR(SingularJacobian);
ASYMP_DEFINE_ERROR(DegenerateNodes);
ASYMP_DEFINE_ERROR(InsufficientPoints);
ASYMP_DEFINE_ERROR(MismatchedExpansionPoint);
ASYMP_DEFINE_ERROR(ZeroLeadingCoefficient);
ASYMP_DEFINE_ERROR(NonpositiveLeadingCoefficient);
ASYMP_DEFINE_ERROR(MissingCoefficients);
ASYMP_DEFINE_ERROR(MissingCriticalConstants);
ASYMP_DEFINE_ERROR(NoPhysicalRoot);
ASYMP_DEFINE_ERROR(ZeroAsymptoticConstant);
ASYMP_DEFINE_ERROR(ZeroCenterValue);
ASYMP_DEFINE_ERROR(PoleEncountered);
ASYMP_DEFINE_ERROR(ConvergedToTrivial);
ASYMP_DEFINE_ERROR(InsufficientCoefficients);
ASYMP_DEFINE_ERROR(DomainMismatch);

#undef ASYMP_DEFINE_ERROR

}  // namespace asymp
