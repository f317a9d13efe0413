#pragma once

// Abelian lattice-ordered groups with a distinguished unit
// (G, +, -, <=, inf, sup, 0, u). The unit is strong when every element is
// dominated by some n-fold sum of u; unit_bound produces that witness where
// the representation can certify one.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mundici/report.hpp"
#include "mundici/rng.hpp"
#include "mundici/value.hpp"

namespace mundici {

class LGroupU;
using LPtr = std::shared_ptr<const LGroupU>;

class LGroupU {
public:
  virtual ~LGroupU() = default;

  virtual std::string name() const = 0;
  virtual Value zero() const = 0;
  virtual Value unit() const = 0;
  virtual Value add(const Value& x, const Value& y) const = 0;
  virtual Value neg(const Value& x) const = 0;
  virtual bool leq(const Value& x, const Value& y) const = 0;
  virtual Value inf(const Value& x, const Value& y) const = 0;
  virtual Value sup(const Value& x, const Value& y) const = 0;

  // Witness n with |x| <= n*u, when the representation can certify one.
  // nullopt means "no certificate", not "no such n".
  virtual std::optional<long long> unit_bound(const Value& x) const = 0;

  virtual bool contains(const Value& x) const = 0;
  virtual bool eq(const Value& x, const Value& y) const { return x == y; }
  virtual Value sample(Rng& rng) const = 0;
  virtual std::vector<Value> probes() const;

  // Enumeration of the interval [0, u] where feasible. max_len bounds the
  // search depth for difference-pair representations; concrete carriers
  // ignore it.
  virtual bool interval_enumerable() const { return false; }
  virtual std::vector<Value> interval_elements(int max_len) const;

  virtual std::string format(const Value& x) const { return x.repr(); }

  // JSON description for carriers with a documented file form; throws
  // BadInput on derived carriers that have none.
  virtual std::string json_spec() const;

  Value sub(const Value& x, const Value& y) const { return add(x, neg(y)); }
  Value scale(long long n, const Value& x) const;  // n-fold sum, any integer n
  void require_element(const Value& x) const;
};

Value l_abs(const LGroupU& g, const Value& x);     // sup(x, -x)
Value pos_part(const LGroupU& g, const Value& x);  // sup(x, 0)
Value neg_part(const LGroupU& g, const Value& x);  // sup(-x, 0)

struct LHom {
  LPtr source;
  LPtr target;
  std::function<Value(const Value&)> map;
  std::string label;

  Value operator()(const Value& x) const { return map(x); }
};

LHom l_identity(const LPtr& g);
LHom l_compose(const LHom& g, const LHom& f);

// (Z, u = n), n >= 1.
LPtr make_scaled_int(long long n);

// Z^k with coordinatewise order. Units with zero coordinates are accepted
// (the strong-unit check is expected to fail on them with a witness).
LPtr make_free_pointwise(std::vector<long long> unit);

// Z x Z ordered lexicographically.
LPtr make_lex_z2(long long u1, long long u2);

// Q^k with coordinatewise order; unit coordinates must be positive.
LPtr make_rational_vec(std::vector<Rat> unit);

Report check_lu_axioms(const LPtr& g, const CheckOptions& opt = {});
Report check_l_hom(const LHom& h, const CheckOptions& opt = {});

// n*x = 0 with n >= 1 forces x = 0; checked for n up to opt.budget scaled
// down (at least 50) over sampled elements.
Report check_torsion_free(const LPtr& g, const CheckOptions& opt = {});

std::vector<Value> element_pool(const LGroupU& g, long long budget, Rng& rng, bool* exhaustive);

}  // namespace mundici
