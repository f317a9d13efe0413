#pragma once

// Closed universe of carrier elements. One recursive sum covers every
// representation in the library: table indices and integer components are
// Int, chain elements are exact rationals, and product elements, integer
// vectors, lexicographic pairs and difference pairs are Tuples.

#include <string>
#include <variant>
#include <vector>

#include "mundici/rational.hpp"

namespace mundici {

class Value {
public:
  using Tuple = std::vector<Value>;

  Value() : v_(0LL) {}
  Value(long long i) : v_(i) {}
  Value(int i) : v_(static_cast<long long>(i)) {}
  Value(Rat r) : v_(r) {}
  Value(Tuple t) : v_(std::move(t)) {}

  static Value pair(Value a, Value b) { return Value(Tuple{std::move(a), std::move(b)}); }

  bool is_int() const { return std::holds_alternative<long long>(v_); }
  bool is_rat() const { return std::holds_alternative<Rat>(v_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(v_); }

  long long as_int() const;
  const Rat& as_rat() const;
  const Tuple& as_tuple() const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b);

  // Generic rendering for diagnostics; carriers provide nicer formatting.
  std::string repr() const;

private:
  std::variant<long long, Rat, Tuple> v_;
};

}  // namespace mundici
