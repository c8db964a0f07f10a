#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

/// Base of every error raised by the toolkit. `kind()` is the stable
/// identifier used in CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ENRIQUES_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    };

// algebra
ENRIQUES_DEFINE_ERROR(DivisionByZero)
ENRIQUES_DEFINE_ERROR(FieldMismatch)
ENRIQUES_DEFINE_ERROR(ZeroPolynomial)
ENRIQUES_DEFINE_ERROR(UnknownVariable)
ENRIQUES_DEFINE_ERROR(ZeroFunction)
ENRIQUES_DEFINE_ERROR(NotIrreducible)
// weierstrass
ENRIQUES_DEFINE_ERROR(SingularModel)
ENRIQUES_DEFINE_ERROR(NonMinimalModel)
ENRIQUES_DEFINE_ERROR(PointNotOnCurve)
ENRIQUES_DEFINE_ERROR(InconsistentData)
// derivations
ENRIQUES_DEFINE_ERROR(NotPClosed)
ENRIQUES_DEFINE_ERROR(InvalidParameter)
// curve_config
ENRIQUES_DEFINE_ERROR(UnknownCurveName)
ENRIQUES_DEFINE_ERROR(IntegralSetInvalid)
// dynkin
ENRIQUES_DEFINE_ERROR(DegenerateGraph)
ENRIQUES_DEFINE_ERROR(TripleEdge)
ENRIQUES_DEFINE_ERROR(NotParabolic)
// enriques_rules
ENRIQUES_DEFINE_ERROR(MalformedFacts)
ENRIQUES_DEFINE_ERROR(AmbiguousAssignment)
// io
ENRIQUES_DEFINE_ERROR(UnknownBuiltin)

#undef ENRIQUES_DEFINE_ERROR

/// Text could not be parsed. Carries a 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("ParseError", what + " at line " + std::to_string(line) +
                                  ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace enriques
