#pragma once

// MV-algebras (A, oplus, neg, 0). Everything else is derived:
//   x odot y   = neg(neg x oplus neg y)
//   x <= y     iff neg x oplus y = neg 0
//   sup(x, y)  = (x odot neg y) oplus y
//   inf(x, y)  = x odot (neg x oplus y)

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mundici/report.hpp"
#include "mundici/rng.hpp"
#include "mundici/value.hpp"

namespace mundici {

class MvAlgebra;
using MvPtr = std::shared_ptr<const MvAlgebra>;

class MvAlgebra {
public:
  virtual ~MvAlgebra() = default;

  virtual std::string name() const = 0;
  virtual Value zero() const = 0;
  virtual Value oplus(const Value& x, const Value& y) const = 0;
  virtual Value neg(const Value& x) const = 0;
  virtual bool contains(const Value& x) const = 0;

  // Element equality. Structural by default; interval algebras over quotient
  // groups override it with the group's semantic equality.
  virtual bool eq(const Value& x, const Value& y) const { return x == y; }

  virtual bool finite() const = 0;
  virtual std::vector<Value> elements() const;  // finite carriers only
  virtual Value sample(Rng& rng) const = 0;

  // Deterministic spot elements fed to every sampled check before the random
  // stream, so canonical counterexamples are found reproducibly.
  virtual std::vector<Value> probes() const;

  virtual std::string format(const Value& x) const { return x.repr(); }

  // JSON description for carriers with a documented file form; throws
  // BadInput on derived carriers that have none.
  virtual std::string json_spec() const;

  // Derived operations. The defaults expand the defining formulas above;
  // carriers with a cheaper equivalent form (intervals of groups, chains)
  // override them. Overrides must agree with the defaults on the carrier.
  virtual Value odot(const Value& x, const Value& y) const {
    return neg(oplus(neg(x), neg(y)));
  }
  virtual bool leq(const Value& x, const Value& y) const {
    return eq(oplus(neg(x), y), one());
  }
  virtual Value sup(const Value& x, const Value& y) const {
    return oplus(odot(x, neg(y)), y);
  }
  virtual Value inf(const Value& x, const Value& y) const {
    return odot(x, oplus(neg(x), y));
  }

  Value one() const { return neg(zero()); }
  void require_element(const Value& x) const;  // throws ElementNotInCarrier
};

Value odot(const MvAlgebra& a, const Value& x, const Value& y);
bool mv_leq(const MvAlgebra& a, const Value& x, const Value& y);
Value mv_sup(const MvAlgebra& a, const Value& x, const Value& y);
Value mv_inf(const MvAlgebra& a, const Value& x, const Value& y);

// Finite table algebra on indices 0..k-1. Construction validates shape only;
// the tables may deliberately violate the axioms (check_mv_axioms is the
// semantic gate), but indices out of range are rejected.
MvPtr make_finite_table(std::vector<std::vector<int>> oplus_table, std::vector<int> neg_table,
                        int zero_index, std::string label = "");

// The chain {0, 1/n, ..., 1} with min(1, x+y) and 1-x.
MvPtr make_chain(long long n);

// All rationals in [0,1]; sampled checks only.
MvPtr make_rational_interval();

MvPtr make_product(std::vector<MvPtr> factors);

// Unit interval of the lexicographic plane: pairs (0,k) k >= 0 and (1,-k)
// k >= 0, with truncated addition below (1,0).
MvPtr make_chang();

struct MvHom {
  MvPtr source;
  MvPtr target;
  std::function<Value(const Value&)> map;
  std::string label;

  Value operator()(const Value& x) const { return map(x); }
};

MvHom mv_identity(const MvPtr& a);
MvHom mv_compose(const MvHom& g, const MvHom& f);  // g after f; SourceTargetMismatch if misaligned

Report check_mv_axioms(const MvPtr& a, const CheckOptions& opt = {});
Report check_mv_hom(const MvHom& h, const CheckOptions& opt = {});

// Streams elements for checks: probes, then exhaustive enumeration when the
// carrier is finite, otherwise `budget` random samples.
std::vector<Value> element_pool(const MvAlgebra& a, long long budget, Rng& rng, bool* exhaustive);

}  // namespace mundici
