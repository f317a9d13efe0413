#include "mundici/value.hpp"

#include <sstream>

#include "mundici/errors.hpp"

namespace mundici {

long long Value::as_int() const {
  if (!is_int()) fail(Errc::InvariantViolation, "value is not an integer: " + repr());
  return std::get<long long>(v_);
}

const Rat& Value::as_rat() const {
  if (!is_rat()) fail(Errc::InvariantViolation, "value is not a rational: " + repr());
  return std::get<Rat>(v_);
}

const Value::Tuple& Value::as_tuple() const {
  if (!is_tuple()) fail(Errc::InvariantViolation, "value is not a tuple: " + repr());
  return std::get<Tuple>(v_);
}

static int kind_rank(const Value& v) { return v.is_int() ? 0 : (v.is_rat() ? 1 : 2); }

bool operator<(const Value& a, const Value& b) {
  const int ra = kind_rank(a), rb = kind_rank(b);
  if (ra != rb) return ra < rb;
  if (a.is_int()) return a.as_int() < b.as_int();
  if (a.is_rat()) return a.as_rat() < b.as_rat();
  const auto& ta = a.as_tuple();
  const auto& tb = b.as_tuple();
  for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i] < tb[i]) return true;
    if (tb[i] < ta[i]) return false;
  }
  return ta.size() < tb.size();
}

std::string Value::repr() const {
  if (is_int()) return std::to_string(std::get<long long>(v_));
  if (is_rat()) return std::get<Rat>(v_).str();
  std::ostringstream out;
  out << "(";
  const auto& t = std::get<Tuple>(v_);
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << ",";
    out << t[i].repr();
  }
  out << ")";
  return out.str();
}

}  // namespace mundici
