#pragma once

#include <stdexcept>
#include <string>

namespace mundici {

enum class Errc {
  ElementNotInCarrier,
  AlgebraMismatch,
  SourceTargetMismatch,
  NotAGoodSequence,
  ImageEscapesInterval,
  NegativeElement,
  UnboundVariable,
  SignatureMismatch,
  NotOpen,
  NotContinuous,
  RestrictionEscapesInterval,
  ParseError,
  BadInput,
  InvariantViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace mundici
