#pragma once

#include <stdexcept>
#include <string>

namespace mpg {

enum class Err {
    InconsistentRotation,
    NotTriangulation,
    Disconnected,
    NotPlanar,
    NotMaximal,
    UnknownVertex,
    OrderTooSmall,
    AdjacentPair,
    NoCommonFace,
    UnknownFace,
    NonTriangularFace,
    BadFormat,
    BudgetBelowChromatic,
    StartNotBichromatic,
    AnchorsNotCoordinated,
    NotFourColorable,
    OrderTooLarge,
    WrongDegree,
    NoValidPair,
    BadSite,
    NotEmptyQuad,
    NoDiagonal,
    NotProper,
    CannotReachMaximal,
    TraceMismatch,
    NotTwoTwoFwf,
    NoAlternative,
    BadPrefix,
    NoLegalFace,
    CapExceeded,
    CorpusIncomplete,
};

const char* err_name(Err e);

class GraphError : public std::runtime_error {
public:
    GraphError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw GraphError(code, what); }

} // namespace mpg
