#include "mundici/mv_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "mundici/errors.hpp"

namespace mundici {

std::vector<Value> MvAlgebra::elements() const {
  fail(Errc::InvariantViolation, "carrier of " + name() + " is not enumerable");
}

std::vector<Value> MvAlgebra::probes() const { return {zero(), one()}; }

std::string MvAlgebra::json_spec() const {
  fail(Errc::BadInput, name() + " has no JSON form");
}

void MvAlgebra::require_element(const Value& x) const {
  if (!contains(x)) fail(Errc::ElementNotInCarrier, x.repr() + " is not in " + name());
}

Value odot(const MvAlgebra& a, const Value& x, const Value& y) { return a.odot(x, y); }

bool mv_leq(const MvAlgebra& a, const Value& x, const Value& y) { return a.leq(x, y); }

Value mv_sup(const MvAlgebra& a, const Value& x, const Value& y) { return a.sup(x, y); }

Value mv_inf(const MvAlgebra& a, const Value& x, const Value& y) { return a.inf(x, y); }

namespace {

class FiniteTableAlgebra final : public MvAlgebra {
public:
  FiniteTableAlgebra(std::vector<std::vector<int>> op, std::vector<int> ng, int zero, std::string label)
      : op_(std::move(op)), neg_(std::move(ng)), zero_(zero), label_(std::move(label)) {
    k_ = static_cast<int>(neg_.size());
    if (k_ <= 0) fail(Errc::BadInput, "finite table with empty carrier");
    if (op_.size() != static_cast<size_t>(k_)) fail(Errc::BadInput, "oplus table has wrong row count");
    for (const auto& row : op_) {
      if (row.size() != static_cast<size_t>(k_)) fail(Errc::BadInput, "oplus table has ragged rows");
      for (int v : row)
        if (v < 0 || v >= k_) fail(Errc::BadInput, "oplus table entry out of range");
    }
    for (int v : neg_)
      if (v < 0 || v >= k_) fail(Errc::BadInput, "neg table entry out of range");
    if (zero_ < 0 || zero_ >= k_) fail(Errc::BadInput, "zero index out of range");
  }

  std::string name() const override {
    return label_.empty() ? "finite(" + std::to_string(k_) + ")" : label_;
  }
  Value zero() const override { return Value(static_cast<long long>(zero_)); }
  Value oplus(const Value& x, const Value& y) const override {
    return Value(static_cast<long long>(op_[idx(x)][idx(y)]));
  }
  Value neg(const Value& x) const override { return Value(static_cast<long long>(neg_[idx(x)])); }
  bool contains(const Value& x) const override {
    return x.is_int() && x.as_int() >= 0 && x.as_int() < k_;
  }
  bool finite() const override { return true; }
  std::vector<Value> elements() const override {
    std::vector<Value> out;
    for (int i = 0; i < k_; ++i) out.emplace_back(static_cast<long long>(i));
    return out;
  }
  Value sample(Rng& rng) const override { return Value(rng.below(k_)); }
  std::string format(const Value& x) const override { return "#" + std::to_string(idx(x)); }
  std::string json_spec() const override {
    std::string out = "{\"kind\":\"finite\",\"size\":" + std::to_string(k_) + ",\"oplus\":[";
    for (int i = 0; i < k_; ++i) {
      out += i ? ",[" : "[";
      for (int j = 0; j < k_; ++j) out += (j ? "," : "") + std::to_string(op_[i][j]);
      out += "]";
    }
    out += "],\"neg\":[";
    for (int i = 0; i < k_; ++i) out += (i ? "," : "") + std::to_string(neg_[i]);
    out += "],\"zero\":" + std::to_string(zero_);
    if (!label_.empty()) {
      out += ",\"label\":\"";
      for (char c : label_) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += "\"";
    }
    return out + "}";
  }

private:
  int idx(const Value& x) const {
    require_element(x);
    return static_cast<int>(x.as_int());
  }
  std::vector<std::vector<int>> op_;
  std::vector<int> neg_;
  int zero_;
  std::string label_;
  int k_ = 0;
};

// den_ > 0: the chain {0, 1/den, ..., 1}; den_ == 0: all of [0,1] cap Q.
class ChainAlgebra final : public MvAlgebra {
public:
  explicit ChainAlgebra(long long den) : den_(den) {}

  std::string name() const override {
    return den_ > 0 ? "L" + std::to_string(den_) : "Q[0,1]";
  }
  Value zero() const override { return Value(Rat(0)); }
  Value oplus(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return Value(rat_min(Rat(1), x.as_rat() + y.as_rat()));
  }
  Value neg(const Value& x) const override {
    require_element(x);
    return Value(Rat(1) - x.as_rat());
  }
  Value odot(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return Value(rat_max(Rat(0), x.as_rat() + y.as_rat() - Rat(1)));
  }
  bool leq(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return x.as_rat() <= y.as_rat();
  }
  Value sup(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return Value(rat_max(x.as_rat(), y.as_rat()));
  }
  Value inf(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return Value(rat_min(x.as_rat(), y.as_rat()));
  }
  bool contains(const Value& x) const override {
    if (!x.is_rat()) return false;
    const Rat& r = x.as_rat();
    if (r < Rat(0) || Rat(1) < r) return false;
    return den_ == 0 || den_ % r.den == 0;
  }
  bool finite() const override { return den_ > 0; }
  std::vector<Value> elements() const override {
    std::vector<Value> out;
    for (long long i = 0; i <= den_; ++i) out.emplace_back(Rat(i, den_));
    return out;
  }
  Value sample(Rng& rng) const override {
    if (den_ > 0) return Value(Rat(rng.range(0, den_), den_));
    const long long d = rng.range(1, 32);
    return Value(Rat(rng.range(0, d), d));
  }
  std::vector<Value> probes() const override {
    if (den_ > 0) return {Value(Rat(0)), Value(Rat(1)), Value(Rat(1, den_))};
    return {Value(Rat(0)), Value(Rat(1)), Value(Rat(1, 2)), Value(Rat(1, 3)), Value(Rat(2, 3))};
  }
  std::string format(const Value& x) const override { return x.as_rat().str(); }
  std::string json_spec() const override {
    return den_ > 0 ? "{\"kind\":\"chain\",\"n\":" + std::to_string(den_) + "}"
                    : "{\"kind\":\"interval\"}";
  }

private:
  long long den_;
};

class ProductAlgebra final : public MvAlgebra {
public:
  explicit ProductAlgebra(std::vector<MvPtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) fail(Errc::BadInput, "product of no factors");
    for (const auto& f : factors_)
      if (!f) fail(Errc::BadInput, "null product factor");
  }

  std::string name() const override {
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += "x";
      out += factors_[i]->name();
    }
    return out;
  }
  Value zero() const override {
    Value::Tuple t;
    for (const auto& f : factors_) t.push_back(f->zero());
    return Value(std::move(t));
  }
  Value oplus(const Value& x, const Value& y) const override {
    return zip(x, y, [](const MvAlgebra& f, const Value& a, const Value& b) { return f.oplus(a, b); });
  }
  Value neg(const Value& x) const override {
    const auto& t = parts(x);
    Value::Tuple out;
    for (size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->neg(t[i]));
    return Value(std::move(out));
  }
  Value odot(const Value& x, const Value& y) const override {
    return zip(x, y, [](const MvAlgebra& f, const Value& a, const Value& b) { return f.odot(a, b); });
  }
  bool leq(const Value& x, const Value& y) const override {
    const auto& a = parts(x);
    const auto& b = parts(y);
    for (size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->leq(a[i], b[i])) return false;
    return true;
  }
  Value sup(const Value& x, const Value& y) const override {
    return zip(x, y, [](const MvAlgebra& f, const Value& a, const Value& b) { return f.sup(a, b); });
  }
  Value inf(const Value& x, const Value& y) const override {
    return zip(x, y, [](const MvAlgebra& f, const Value& a, const Value& b) { return f.inf(a, b); });
  }
  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.as_tuple().size() != factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->contains(x.as_tuple()[i])) return false;
    return true;
  }
  bool eq(const Value& x, const Value& y) const override {
    const auto& a = parts(x);
    const auto& b = parts(y);
    for (size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->eq(a[i], b[i])) return false;
    return true;
  }
  bool finite() const override {
    return std::all_of(factors_.begin(), factors_.end(), [](const MvPtr& f) { return f->finite(); });
  }
  std::vector<Value> elements() const override {
    std::vector<Value::Tuple> acc{{}};
    for (const auto& f : factors_) {
      std::vector<Value::Tuple> next;
      for (const auto& prefix : acc)
        for (const auto& e : f->elements()) {
          auto t = prefix;
          t.push_back(e);
          next.push_back(std::move(t));
        }
      acc = std::move(next);
    }
    std::vector<Value> out;
    for (auto& t : acc) out.emplace_back(std::move(t));
    return out;
  }
  Value sample(Rng& rng) const override {
    Value::Tuple t;
    for (const auto& f : factors_) t.push_back(f->sample(rng));
    return Value(std::move(t));
  }
  std::vector<Value> probes() const override {
    std::vector<Value> out{zero(), neg(zero())};
    for (size_t i = 0; i < factors_.size(); ++i) {
      Value::Tuple t;
      for (size_t j = 0; j < factors_.size(); ++j)
        t.push_back(i == j ? factors_[j]->neg(factors_[j]->zero()) : factors_[j]->zero());
      out.emplace_back(std::move(t));
    }
    return out;
  }
  std::string format(const Value& x) const override {
    const auto& t = parts(x);
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->format(t[i]);
    }
    return out + ")";
  }
  std::string json_spec() const override {
    std::string out = "{\"kind\":\"product\",\"factors\":[";
    for (size_t i = 0; i < factors_.size(); ++i) out += (i ? "," : "") + factors_[i]->json_spec();
    return out + "]}";
  }

private:
  const Value::Tuple& parts(const Value& x) const {
    require_element(x);
    return x.as_tuple();
  }
  template <typename F>
  Value zip(const Value& x, const Value& y, F op) const {
    const auto& a = parts(x);
    const auto& b = parts(y);
    Value::Tuple out;
    for (size_t i = 0; i < factors_.size(); ++i) out.push_back(op(*factors_[i], a[i], b[i]));
    return Value(std::move(out));
  }
  std::vector<MvPtr> factors_;
};

// Unit interval of Z x_lex Z below (1,0): pairs (0,k) with k >= 0 and
// (1,-k) with k >= 0. Addition is truncated at (1,0) in the lexicographic
// order; negation is subtraction from (1,0).
class ChangAlgebra final : public MvAlgebra {
public:
  std::string name() const override { return "Chang"; }
  Value zero() const override { return Value::pair(Value(0LL), Value(0LL)); }
  Value oplus(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    const long long a = x.as_tuple()[0].as_int() + y.as_tuple()[0].as_int();
    const long long b = x.as_tuple()[1].as_int() + y.as_tuple()[1].as_int();
    if (a > 1 || (a == 1 && b >= 0)) return Value::pair(Value(1LL), Value(0LL));
    return Value::pair(Value(a), Value(b));
  }
  Value neg(const Value& x) const override {
    require_element(x);
    return Value::pair(Value(1 - x.as_tuple()[0].as_int()), Value(-x.as_tuple()[1].as_int()));
  }
  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.as_tuple().size() != 2) return false;
    if (!x.as_tuple()[0].is_int() || !x.as_tuple()[1].is_int()) return false;
    const long long a = x.as_tuple()[0].as_int();
    const long long b = x.as_tuple()[1].as_int();
    return (a == 0 && b >= 0) || (a == 1 && b <= 0);
  }
  bool finite() const override { return false; }
  Value sample(Rng& rng) const override {
    const long long k = rng.below(50);
    return rng.coin() ? Value::pair(Value(0LL), Value(k)) : Value::pair(Value(1LL), Value(-k));
  }
  std::vector<Value> probes() const override {
    return {Value::pair(Value(0LL), Value(0LL)), Value::pair(Value(1LL), Value(0LL)),
            Value::pair(Value(0LL), Value(1LL)), Value::pair(Value(1LL), Value(-1LL)),
            Value::pair(Value(0LL), Value(2LL)), Value::pair(Value(1LL), Value(-2LL))};
  }
  std::string format(const Value& x) const override { return x.repr(); }
  std::string json_spec() const override { return "{\"kind\":\"chang\"}"; }
};

}  // namespace

MvPtr make_finite_table(std::vector<std::vector<int>> oplus_table, std::vector<int> neg_table,
                        int zero_index, std::string label) {
  return std::make_shared<FiniteTableAlgebra>(std::move(oplus_table), std::move(neg_table),
                                              zero_index, std::move(label));
}

MvPtr make_chain(long long n) {
  if (n < 1) fail(Errc::BadInput, "chain parameter must be >= 1");
  return std::make_shared<ChainAlgebra>(n);
}

MvPtr make_rational_interval() { return std::make_shared<ChainAlgebra>(0); }

MvPtr make_product(std::vector<MvPtr> factors) {
  return std::make_shared<ProductAlgebra>(std::move(factors));
}

MvPtr make_chang() { return std::make_shared<ChangAlgebra>(); }

static bool same_structure(const MvPtr& a, const MvPtr& b) {
  return a == b || a->name() == b->name();
}

MvHom mv_identity(const MvPtr& a) {
  return MvHom{a, a, [](const Value& x) { return x; }, "id"};
}

MvHom mv_compose(const MvHom& g, const MvHom& f) {
  if (!same_structure(f.target, g.source))
    fail(Errc::SourceTargetMismatch,
         "cannot compose: " + f.target->name() + " vs " + g.source->name());
  auto fm = f.map;
  auto gm = g.map;
  return MvHom{f.source, g.target, [fm, gm](const Value& x) { return gm(fm(x)); },
               g.label + "." + f.label};
}

std::vector<Value> element_pool(const MvAlgebra& a, long long budget, Rng& rng, bool* exhaustive) {
  if (a.finite()) {
    if (exhaustive) *exhaustive = true;
    return a.elements();
  }
  if (exhaustive) *exhaustive = false;
  std::vector<Value> pool = a.probes();
  while (static_cast<long long>(pool.size()) < budget) pool.push_back(a.sample(rng));
  return pool;
}

namespace {

struct LawDriver {
  const MvAlgebra& a;
  Report& rep;

  std::string fmt2(const Value& x, const Value& y) { return "x=" + a.format(x) + " y=" + a.format(y); }

  void unary(const std::vector<Value>& pool) {
    for (const auto& x : pool) {
      rep.checked += 4;
      if (!a.contains(a.neg(x))) {
        rep.fail_with("closure under neg", "x=" + a.format(x));
        return;
      }
      if (!a.eq(a.oplus(x, a.zero()), x)) {
        rep.fail_with("axiom 3 (x oplus 0 = x)", "x=" + a.format(x));
        return;
      }
      if (!a.eq(a.neg(a.neg(x)), x)) {
        rep.fail_with("axiom 4 (neg neg x = x)", "x=" + a.format(x));
        return;
      }
      if (!a.eq(a.oplus(x, a.one()), a.one())) {
        rep.fail_with("axiom 5 (x oplus neg 0 = neg 0)", "x=" + a.format(x));
        return;
      }
    }
  }

  void binary(const Value& x, const Value& y) {
    rep.checked += 3;
    const Value xy = a.oplus(x, y);
    if (!a.contains(xy)) {
      rep.fail_with("closure under oplus", fmt2(x, y));
      return;
    }
    if (!a.eq(xy, a.oplus(y, x))) {
      rep.fail_with("axiom 2 (commutativity)", fmt2(x, y));
      return;
    }
    const Value lhs = a.oplus(a.neg(a.oplus(a.neg(x), y)), y);
    const Value rhs = a.oplus(a.neg(a.oplus(a.neg(y), x)), x);
    if (!a.eq(lhs, rhs))
      rep.fail_with("axiom 6 (neg(neg x oplus y) oplus y = neg(neg y oplus x) oplus x)",
                    fmt2(x, y) + " lhs=" + a.format(lhs) + " rhs=" + a.format(rhs));
  }

  void ternary(const Value& x, const Value& y, const Value& z) {
    rep.checked += 1;
    if (!a.eq(a.oplus(x, a.oplus(y, z)), a.oplus(a.oplus(x, y), z)))
      rep.fail_with("axiom 1 (associativity)", fmt2(x, y) + " z=" + a.format(z));
  }
};

}  // namespace

Report check_mv_axioms(const MvPtr& a, const CheckOptions& opt) {
  Report rep;
  rep.check = "mv-axioms";
  rep.subject = a->name();
  rep.seed = opt.seed;
  Rng rng(opt.seed);
  bool exhaustive = false;
  const auto pool = element_pool(*a, opt.budget, rng, &exhaustive);
  rep.mode = exhaustive ? "exhaustive" : "sampled";
  LawDriver drv{*a, rep};
  try {
    drv.unary(pool);
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool) {
          drv.binary(x, y);
          if (!rep.pass()) return rep;
        }
      for (const auto& x : pool)
        for (const auto& y : pool)
          for (const auto& z : pool) {
            drv.ternary(x, y, z);
            if (!rep.pass()) return rep;
          }
    } else {
      const auto& pr = pool;  // probes are at the front of the pool
      const size_t k = pr.size();
      for (size_t i = 0; i < k && rep.pass(); ++i) {
        drv.binary(pr[i], pr[(i * 7 + 3) % k]);
        drv.binary(pr[(i * 5 + 1) % k], pr[i]);
      }
      for (long long t = 0; t < opt.budget && rep.pass(); ++t) {
        const Value x = a->sample(rng);
        const Value y = a->sample(rng);
        const Value z = a->sample(rng);
        drv.binary(x, y);
        if (!rep.pass()) break;
        drv.ternary(x, y, z);
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_mv_hom(const MvHom& h, const CheckOptions& opt) {
  Report rep;
  rep.check = "mv-hom";
  rep.subject = (h.label.empty() ? std::string("h") : h.label) + ": " + h.source->name() + " -> " +
                h.target->name();
  rep.seed = opt.seed;
  Rng rng(opt.seed);
  const MvAlgebra& s = *h.source;
  const MvAlgebra& t = *h.target;
  bool exhaustive = false;
  const auto pool = element_pool(s, opt.budget, rng, &exhaustive);
  rep.mode = exhaustive ? "exhaustive" : "sampled";
  try {
    rep.checked += 1;
    if (!t.eq(h(s.zero()), t.zero())) {
      rep.fail_with("hom preserves 0", "h(0)=" + t.format(h(s.zero())));
      return rep;
    }
    for (const auto& x : pool) {
      rep.checked += 2;
      if (!t.contains(h(x))) {
        rep.fail_with("hom lands in target carrier", "x=" + s.format(x));
        return rep;
      }
      if (!t.eq(h(s.neg(x)), t.neg(h(x)))) {
        rep.fail_with("hom preserves neg", "x=" + s.format(x));
        return rep;
      }
    }
    auto check_pair = [&](const Value& x, const Value& y) {
      rep.checked += 1;
      if (!t.eq(h(s.oplus(x, y)), t.oplus(h(x), h(y))))
        rep.fail_with("hom preserves oplus", "x=" + s.format(x) + " y=" + s.format(y));
    };
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool) {
          check_pair(x, y);
          if (!rep.pass()) return rep;
        }
    } else {
      for (long long i = 0; i < opt.budget && rep.pass(); ++i) check_pair(s.sample(rng), s.sample(rng));
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

}  // namespace mundici
