#pragma once

#include <stdexcept>
#include <string>

namespace fol {

// Families map one-to-one onto CLI exit codes.
enum class ErrorFamily {
    Validation = 1,
    Parse = 2,
    AssertionRefuted = 3,
    Identity = 4,
};

class Error : public std::runtime_error {
public:
    Error(std::string kind, ErrorFamily family, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), family_(family) {}

    const std::string& kind() const noexcept { return kind_; }
    ErrorFamily family() const noexcept { return family_; }

private:
    std::string kind_;
    ErrorFamily family_;
};

#define FOL_DEFINE_ERROR(Name, Family)                                   \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& detail)                         \
            : Error(#Name, ErrorFamily::Family, detail) {}               \
    };

FOL_DEFINE_ERROR(ParseError, Parse)
FOL_DEFINE_ERROR(SchemaError, Parse)

FOL_DEFINE_ERROR(ValidationFailed, Validation)
FOL_DEFINE_ERROR(UnknownCurve, Validation)
FOL_DEFINE_ERROR(BadOrder, Validation)
FOL_DEFINE_ERROR(AmbiguousTail, Validation)
FOL_DEFINE_ERROR(ModelInconsistent, Validation)
FOL_DEFINE_ERROR(BadSite, Validation)

FOL_DEFINE_ERROR(PreconditionViolated, AssertionRefuted)
FOL_DEFINE_ERROR(DivisionByZero, AssertionRefuted)
FOL_DEFINE_ERROR(NonNegativeSelfIntersection, AssertionRefuted)
FOL_DEFINE_ERROR(NonContractible, AssertionRefuted)
FOL_DEFINE_ERROR(NotPseudoeffectiveAssert, AssertionRefuted)
FOL_DEFINE_ERROR(FanoBranch, AssertionRefuted)
FOL_DEFINE_ERROR(NotNegativeDefinite, AssertionRefuted)
FOL_DEFINE_ERROR(NegativeCoefficient, AssertionRefuted)
FOL_DEFINE_ERROR(NonPositiveLambda, AssertionRefuted)
FOL_DEFINE_ERROR(CoefficientOutOfRange, AssertionRefuted)
FOL_DEFINE_ERROR(UnclassifiableCurve, AssertionRefuted)
FOL_DEFINE_ERROR(StrictWarning, AssertionRefuted)

FOL_DEFINE_ERROR(SingularMatrix, Identity)
FOL_DEFINE_ERROR(IdentityViolation, Identity)
FOL_DEFINE_ERROR(NoMinusOneCurve, Identity)
FOL_DEFINE_ERROR(NonTermination, Identity)
FOL_DEFINE_ERROR(MismatchError, Identity)

#undef FOL_DEFINE_ERROR

}  // namespace fol
