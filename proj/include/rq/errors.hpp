#pragma once

#include <stdexcept>
#include <string>

namespace rq {

/// Base for all library errors; `code()` is the stable machine-readable tag
/// surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define RQ_ERROR(Name)                              \
  struct Name : Error {                             \
    explicit Name(const std::string& what)          \
        : Error(#Name, what) {}                     \
  }

RQ_ERROR(AmbientError);
RQ_ERROR(ImproperIdeal);
RQ_ERROR(BadModulus);
RQ_ERROR(BadIdeal);
RQ_ERROR(FactorizationMismatch);
RQ_ERROR(MissingRoots);
RQ_ERROR(BadPrime);
RQ_ERROR(NeedRoots);
RQ_ERROR(TooLarge);
RQ_ERROR(OracleMismatch);
RQ_ERROR(NameError);

#undef RQ_ERROR

struct ParseError : Error {
  ParseError(int line, int col, const std::string& expected)
      : Error("ParseError", "line " + std::to_string(line) + ", col " +
                                std::to_string(col) + ": expected " + expected),
        line(line),
        col(col),
        expected(expected) {}
  int line, col;
  std::string expected;
};

}  // namespace rq
