#pragma once

// Good sequences over an MV-algebra: finitely supported sequences with
// a_i oplus a_{i+1} = a_i, stored trimmed (no trailing zeros). The empty
// list is the zero sequence. Sums use the convolution
//   c_i = a_i oplus (a_{i-1} odot b_1) oplus ... oplus (a_1 odot b_{i-1}) oplus b_i,
// under which the set of good sequences is a cancellative lattice-ordered
// abelian monoid.

#include <string>
#include <vector>

#include "mundici/mv_algebra.hpp"

namespace mundici {

class GoodSequence {
public:
  // Trims trailing zeros, then validates membership and absorption.
  // Throws NotAGoodSequence naming the first violating index (1-based).
  static GoodSequence normalize(MvPtr a, std::vector<Value> raw);

  // Trims trailing zeros only; the caller certifies goodness. Used on values
  // that were produced by validated constructions and round-tripped through
  // the difference-pair encoding.
  static GoodSequence trusted(MvPtr a, std::vector<Value> raw);

  static GoodSequence zero(MvPtr a);
  static GoodSequence unit(MvPtr a);             // (neg 0)
  static GoodSequence ones(MvPtr a, int m);      // m copies of neg 0
  static GoodSequence single(MvPtr a, Value v);  // (v), trimmed if v = 0

  const MvPtr& algebra() const { return alg_; }
  const std::vector<Value>& components() const { return comps_; }
  int length() const { return static_cast<int>(comps_.size()); }
  bool is_zero() const { return comps_.empty(); }

  // 1-based component access; indices beyond the support give 0.
  const Value& at(int i) const;

  std::string str() const;

  // Tuple-of-components encoding used by the difference-pair group carrier.
  Value encode() const;
  static GoodSequence decode(MvPtr a, const Value& v);
  static GoodSequence decode_trusted(MvPtr a, const Value& v);

private:
  GoodSequence(MvPtr a, std::vector<Value> comps)
      : alg_(std::move(a)), comps_(std::move(comps)), zero_(alg_ ? alg_->zero() : Value()) {}
  MvPtr alg_;
  std::vector<Value> comps_;
  Value zero_;  // cached for out-of-support access
};

// Same-algebra guard for binary operations; throws AlgebraMismatch.
void require_same_algebra(const GoodSequence& x, const GoodSequence& y);

bool good_eq(const GoodSequence& x, const GoodSequence& y);
GoodSequence good_sum(const GoodSequence& x, const GoodSequence& y);
bool good_leq(const GoodSequence& x, const GoodSequence& y);  // pointwise
GoodSequence good_inf(const GoodSequence& x, const GoodSequence& y);
GoodSequence good_sup(const GoodSequence& x, const GoodSequence& y);

// All good sequences of length <= max_len over a finite carrier.
std::vector<GoodSequence> enumerate_good_sequences(const MvPtr& a, int max_len);

// Random good sequence as a sum of <= max_len random singletons (every good
// sequence is such a sum, so the support is full).
GoodSequence sample_good_sequence(const MvPtr& a, int max_len, Rng& rng);

Report check_monoid_laws(const MvPtr& a, const CheckOptions& opt = {});
Report check_cancellation(const MvPtr& a, const CheckOptions& opt = {});

}  // namespace mundici
