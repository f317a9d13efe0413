#pragma once

// Deterministic sampling. mt19937_64 is fully specified by the standard;
// bounding is done by hand because uniform_int_distribution is not portable
// across standard libraries.

#include <cstdint>
#include <random>

namespace mundici {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish in [0, n); n > 0. Modulo bias is irrelevant at test scale.
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform-ish in [lo, hi].
  long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1) != 0; }

private:
  std::mt19937_64 eng_;
};

}  // namespace mundici
