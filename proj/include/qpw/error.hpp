#pragma once

#include <stdexcept>
#include <string>

namespace qpw {

// Domain errors carry a stable name that the CLI prints on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define QPW_ERROR_TYPE(NAME)                                          \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

QPW_ERROR_TYPE(DivisionByZero);
QPW_ERROR_TYPE(UnsupportedParam);
QPW_ERROR_TYPE(NonIntegerMultiplicity);
QPW_ERROR_TYPE(NotScalar);
QPW_ERROR_TYPE(Infeasible);
QPW_ERROR_TYPE(LoopAtVertex);
QPW_ERROR_TYPE(ReductionFailed);
QPW_ERROR_TYPE(BudgetExceeded);
QPW_ERROR_TYPE(NotAutomorphism);
QPW_ERROR_TYPE(AsymmetricQuiver);
QPW_ERROR_TYPE(EmptyChamber);
QPW_ERROR_TYPE(DimensionMismatch);
QPW_ERROR_TYPE(UnexpectedLoopCount);
QPW_ERROR_TYPE(ParseError);

#undef QPW_ERROR_TYPE

} // namespace qpw
