#pragma once

#include <stdexcept>
#include <string>

namespace polydec {

// Error taxonomy. User errors are precondition violations an input can
// trigger; internal errors indicate a broken invariant inside the library
// (a block that is not a block, a factorization that does not multiply
// back, ...). CLI maps user errors to exit 1 and internal errors to exit 2.
enum class Errc {
  // user-facing
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  NoEmbedding,
  ConstantInput,
  NotNormal,
  DerivativeZero,
  NotMonic,
  DegreeTooSmall,
  NotTransitive,
  BudgetExceeded,
  ParseError,
  CoefficientOutOfField,
  NotApplicable,
  // internal consistency failures
  AlphaLeak,
  LeftComponentMissing,
  NotClosed,
  SeedsNotCoprime,
  SeedProductMismatch,
  NoCaseMatches,
  BoundViolated,
  NotIrreducible,
  NotInvertible,
  CompositionMismatch,
};

constexpr bool is_internal(Errc c) {
  return c >= Errc::AlphaLeak;
}

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }
  bool internal() const { return is_internal(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace polydec
