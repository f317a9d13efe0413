#include "mundici/errors.hpp"

namespace mundici {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ElementNotInCarrier: return "element-not-in-carrier";
    case Errc::AlgebraMismatch: return "algebra-mismatch";
    case Errc::SourceTargetMismatch: return "source-target-mismatch";
    case Errc::NotAGoodSequence: return "not-a-good-sequence";
    case Errc::ImageEscapesInterval: return "image-escapes-interval";
    case Errc::NegativeElement: return "negative-element";
    case Errc::UnboundVariable: return "unbound-variable";
    case Errc::SignatureMismatch: return "signature-mismatch";
    case Errc::NotOpen: return "not-open";
    case Errc::NotContinuous: return "not-continuous";
    case Errc::RestrictionEscapesInterval: return "restriction-escapes-interval";
    case Errc::ParseError: return "parse-error";
    case Errc::BadInput: return "bad-input";
    case Errc::InvariantViolation: return "invariant-violation";
  }
  return "unknown-error";
}

}  // namespace mundici
