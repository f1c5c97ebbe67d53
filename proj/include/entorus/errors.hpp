#ifndef ENTORUS_ERRORS_HPP
#define ENTORUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entorus {

enum class Err {
    InvalidArgument,
    NotSquarefree,
    NotPrime,
    NoIrreducibleFound,
    ZeroElement,
    DenominatorNotOne,
    NotInSubfield,
    NotDivisor,
    NoCurveFound,
    HasseInfeasible,
    DegenerateTriple,
    NotABasis,
    NormalityFailed,
    NotSquarefreeOdd,
    NotPrimeQ,
    CongruenceViolation,
    LemmaTwoViolation,
    NNotInvertible,
    NotInTorus,
    ZeroComponentEncountered,
    MalformedStream,
    Internal,
};

// Error carries a code plus up to two integer payloads (divisor pair, block
// index, ...) so callers can assert on the structured cause, not the text.
class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what, long long a = 0, long long b = 0)
        : std::runtime_error(what), code_(code), a_(a), b_(b) {}

    Err code() const noexcept { return code_; }
    long long payload_a() const noexcept { return a_; }
    long long payload_b() const noexcept { return b_; }

  private:
    Err code_;
    long long a_, b_;
};

[[noreturn]] inline void raise(Err code, const std::string& what, long long a = 0, long long b = 0) {
    throw Error(code, what, a, b);
}

}  // namespace entorus

#endif
