#ifndef UTAUT_ERRORS_HPP
#define UTAUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace utaut {

enum class Err {
  NotPrime,
  DegreeTooLarge,
  ContextMismatch,
  DivisionByZero,
  BadParams,
  OrderCapExceeded,
  IndexOutOfRange,
  NotConjugate,
  ClosureCapExceeded,
  CandidateCapExceeded,
  ExtensionFailed,
  PrimeFieldRejected,
  BadC,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

} // namespace utaut

#endif
