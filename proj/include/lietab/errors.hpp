#ifndef LIETAB_ERRORS_HPP
#define LIETAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lietab {

enum class Errc {
  DivisionByZero,
  ParseError,
  UnsatisfiableGuard,
  GuardViolation,
  SupportMismatch,
  UnknownClass,
  UnknownName,
  DimensionMismatch,
  RankDeficient,
  NoIntegerSolution,
  Inconsistent,
  NonInvertibleMatrix,
  IncompleteRegistry,
  InconsistentTable,
  MissingData,
  IoError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class EngineError : public std::runtime_error {
 public:
  EngineError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw EngineError(code, msg);
}

}  // namespace lietab

#endif
