#ifndef NFCOH_ERRORS_HPP
#define NFCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nfc {

enum class Err {
    ParseError,
    NonMonic,
    ReduciblePolynomial,
    InvalidArgument,
    DivisionByZero,
    NotAnNthPower,
    BoundsExceeded,
    SearchExhausted,
    RankTooLarge,
    RootOfUnityMissing,
    RamifiedExtension,
    NormNotOne,
    ResolventExhausted,
    NormNotTrivial,
    ClassEquationUnsolvable,
    NotInZ1,
    DescentFailure,
    NotDivisibleByN,
    ScopeViolation,
    Internal,
};

const char * err_name(Err e);

/* every failure in the library is reported through this type; the code
 * is what callers (and the CLI) switch on */
class error : public std::runtime_error {
    Err code_;
  public:
    error(Err c, std::string const & msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code_(c) {}
    Err code() const { return code_; }
};

}

#endif
