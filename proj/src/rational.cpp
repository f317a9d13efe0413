#include "mundici/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mundici {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::BadInput, "empty rational literal");
  size_t pos = 0;
  auto read_int = [&](const char* what) -> long long {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail(Errc::BadInput, std::string("expected ") + what + " in rational literal: " + s);
    return std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
  };
  const long long num = read_int("numerator");
  if (pos == s.size()) return Rat(num);
  if (s[pos] != '/') fail(Errc::BadInput, "malformed rational literal: " + s);
  ++pos;
  const long long den = read_int("denominator");
  if (pos != s.size()) fail(Errc::BadInput, "trailing characters in rational literal: " + s);
  return Rat(num, den);
}

}  // namespace mundici
