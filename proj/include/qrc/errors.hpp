#pragma once

#include <stdexcept>
#include <string>

namespace qrc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parser failure; positions are 1-based.
struct SyntaxError : Error {
    int line;
    int column;
    std::string expected;

    SyntaxError(int line_, int col_, const std::string& expected_, const std::string& got)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": expected " + expected_ + ", got " + got),
          line(line_), column(col_), expected(expected_) {}
};

// A quantified variable falls outside the fragments the engine eliminates.
struct UnsupportedFragment : Error {
    std::string location;
    std::string reason;

    UnsupportedFragment(const std::string& location_, const std::string& reason_)
        : Error("unsupported fragment at " + location_ + ": " + reason_),
          location(location_), reason(reason_) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// No virtual-substitution rule covers this atom/test-point combination.
struct TableMiss : Error {
    explicit TableMiss(const std::string& msg) : Error(msg) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg) : Error(msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

struct EvenBound : Error {
    explicit EvenBound(const std::string& msg) : Error(msg) {}
};

struct NotASentence : Error {
    explicit NotASentence(const std::string& msg) : Error(msg) {}
};

struct MissingAssignment : Error {
    explicit MissingAssignment(const std::string& msg) : Error(msg) {}
};

struct FreeVariableMismatch : Error {
    explicit FreeVariableMismatch(const std::string& msg) : Error(msg) {}
};

struct UnsupportedQuantifierShape : Error {
    explicit UnsupportedQuantifierShape(const std::string& msg) : Error(msg) {}
};

struct NoSquareRoot : Error {
    enum class Reason { OddOrder, NonSquareLeadingCoefficient };
    Reason reason;

    explicit NoSquareRoot(Reason r)
        : Error(r == Reason::OddOrder ? "no square root: odd order"
                                      : "no square root: non-square leading coefficient"),
          reason(r) {}
};

struct NotSimpleResidueRoot : Error {
    explicit NotSimpleResidueRoot(const std::string& msg) : Error(msg) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error(msg) {}
};

}  // namespace qrc
