#pragma once

#include <stdexcept>
#include <string>

namespace darr {

enum class Err {
  DuplicateLine,
  MissingXLine,
  TooFewLines,
  NotDivisible,
  ArrangementMismatch,
  NotInT,
  NotInS,
  DegreeMismatch,
  UnsupportedDegree,
  IndexOutOfRange,
  ConditionFails,
  RankOverflow,
  ExponentOverflow,
  UncoveredShape,
  NotCocycle,
  MalformedInput,
};

const char *err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string &msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string &msg) { throw Error(code, msg); }

}  // namespace darr
