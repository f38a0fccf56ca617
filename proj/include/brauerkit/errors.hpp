#pragma once

#include <stdexcept>
#include <string>

namespace brauerkit {

// Domain errors carry the variant name used in CLI JSON output.
class Error : public std::runtime_error {
public:
    Error(std::string variant, const std::string& what)
        : std::runtime_error(what), variant_(std::move(variant)) {}
    const std::string& variant() const { return variant_; }

private:
    std::string variant_;
};

#define BRAUERKIT_ERROR(Name)                                   \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& what)                  \
            : Error(#Name, what) {}                             \
    }

BRAUERKIT_ERROR(FactorizationBoundExceeded);
BRAUERKIT_ERROR(HenselConditionFailed);
BRAUERKIT_ERROR(DimensionOverflow);
BRAUERKIT_ERROR(NotAnAction);
BRAUERKIT_ERROR(NotASubgroup);
BRAUERKIT_ERROR(DegenerateForm);
BRAUERKIT_ERROR(DiscriminantNotTrivial);
BRAUERKIT_ERROR(SearchBudgetExceeded);
BRAUERKIT_ERROR(InsufficientPrecision);
BRAUERKIT_ERROR(NoSmoothResiduePoint);
BRAUERKIT_ERROR(InternalError);
BRAUERKIT_ERROR(ParseError);

#undef BRAUERKIT_ERROR

}  // namespace brauerkit
