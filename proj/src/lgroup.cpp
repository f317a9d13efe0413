#include "mundici/lgroup.hpp"

#include <algorithm>
#include <sstream>

#include "mundici/errors.hpp"

namespace mundici {

std::vector<Value> LGroupU::probes() const { return {zero(), unit(), neg(unit())}; }

std::string LGroupU::json_spec() const {
  fail(Errc::BadInput, name() + " has no JSON form");
}

std::vector<Value> LGroupU::interval_elements(int) const {
  fail(Errc::InvariantViolation, "interval of " + name() + " is not enumerable");
}

Value LGroupU::scale(long long n, const Value& x) const {
  if (n < 0) return neg(scale(-n, x));
  Value acc = zero();
  for (long long i = 0; i < n; ++i) acc = add(acc, x);
  return acc;
}

void LGroupU::require_element(const Value& x) const {
  if (!contains(x)) fail(Errc::ElementNotInCarrier, x.repr() + " is not in " + name());
}

Value l_abs(const LGroupU& g, const Value& x) { return g.sup(x, g.neg(x)); }
Value pos_part(const LGroupU& g, const Value& x) { return g.sup(x, g.zero()); }
Value neg_part(const LGroupU& g, const Value& x) { return g.sup(g.neg(x), g.zero()); }

namespace {

class ScaledIntGroup final : public LGroupU {
public:
  explicit ScaledIntGroup(long long n) : n_(n) {
    if (n_ < 1) fail(Errc::BadInput, "integer group needs unit >= 1");
  }

  std::string name() const override { return "Z(u=" + std::to_string(n_) + ")"; }
  Value zero() const override { return Value(0LL); }
  Value unit() const override { return Value(n_); }
  Value add(const Value& x, const Value& y) const override { return Value(get(x) + get(y)); }
  Value neg(const Value& x) const override { return Value(-get(x)); }
  bool leq(const Value& x, const Value& y) const override { return get(x) <= get(y); }
  Value inf(const Value& x, const Value& y) const override { return Value(std::min(get(x), get(y))); }
  Value sup(const Value& x, const Value& y) const override { return Value(std::max(get(x), get(y))); }
  std::optional<long long> unit_bound(const Value& x) const override {
    const long long a = std::abs(get(x));
    return (a + n_ - 1) / n_;
  }
  bool contains(const Value& x) const override { return x.is_int(); }
  Value sample(Rng& rng) const override { return Value(rng.range(-20, 20)); }
  std::vector<Value> probes() const override {
    return {Value(0LL), Value(n_), Value(-n_), Value(1LL), Value(-1LL), Value(n_ + 1)};
  }
  bool interval_enumerable() const override { return true; }
  std::vector<Value> interval_elements(int) const override {
    std::vector<Value> out;
    for (long long i = 0; i <= n_; ++i) out.emplace_back(i);
    return out;
  }
  std::string format(const Value& x) const override { return std::to_string(get(x)); }
  std::string json_spec() const override { return "{\"kind\":\"zu\",\"n\":" + std::to_string(n_) + "}"; }

private:
  long long get(const Value& x) const {
    require_element(x);
    return x.as_int();
  }
  long long n_;
};

class FreePointwiseGroup final : public LGroupU {
public:
  explicit FreePointwiseGroup(std::vector<long long> unit) : unit_(std::move(unit)) {
    if (unit_.empty()) fail(Errc::BadInput, "pointwise group needs at least one coordinate");
    for (long long u : unit_)
      if (u < 0) fail(Errc::BadInput, "unit coordinates must be >= 0");
  }

  std::string name() const override {
    std::string u;
    for (size_t i = 0; i < unit_.size(); ++i) u += (i ? "," : "") + std::to_string(unit_[i]);
    return "Z^" + std::to_string(unit_.size()) + "(u=[" + u + "])";
  }
  Value zero() const override { return constant(0); }
  Value unit() const override {
    Value::Tuple t;
    for (long long u : unit_) t.emplace_back(u);
    return Value(std::move(t));
  }
  Value add(const Value& x, const Value& y) const override {
    return zip(x, y, [](long long a, long long b) { return a + b; });
  }
  Value neg(const Value& x) const override {
    Value::Tuple t;
    for (const auto& c : coords(x)) t.emplace_back(-c.as_int());
    return Value(std::move(t));
  }
  bool leq(const Value& x, const Value& y) const override {
    const auto& a = coords(x);
    const auto& b = coords(y);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].as_int() > b[i].as_int()) return false;
    return true;
  }
  Value inf(const Value& x, const Value& y) const override {
    return zip(x, y, [](long long a, long long b) { return std::min(a, b); });
  }
  Value sup(const Value& x, const Value& y) const override {
    return zip(x, y, [](long long a, long long b) { return std::max(a, b); });
  }
  std::optional<long long> unit_bound(const Value& x) const override {
    long long n = 0;
    const auto& a = coords(x);
    for (size_t i = 0; i < a.size(); ++i) {
      const long long c = std::abs(a[i].as_int());
      if (unit_[i] == 0) continue;  // no witness possible on this coordinate
      n = std::max(n, (c + unit_[i] - 1) / unit_[i]);
    }
    return n;
  }
  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.as_tuple().size() != unit_.size()) return false;
    for (const auto& c : x.as_tuple())
      if (!c.is_int()) return false;
    return true;
  }
  Value sample(Rng& rng) const override {
    Value::Tuple t;
    for (size_t i = 0; i < unit_.size(); ++i) t.emplace_back(rng.range(-20, 20));
    return Value(std::move(t));
  }
  std::vector<Value> probes() const override {
    std::vector<Value> out{zero(), unit()};
    for (size_t i = 0; i < unit_.size(); ++i) {
      Value::Tuple t;
      for (size_t j = 0; j < unit_.size(); ++j) t.emplace_back(i == j ? 1LL : 0LL);
      out.emplace_back(std::move(t));
    }
    out.push_back(neg(unit()));
    out.push_back(constant(1));
    return out;
  }
  bool interval_enumerable() const override {
    long long count = 1;
    for (long long u : unit_) {
      count *= (u + 1);
      if (count > 100000) return false;
    }
    return true;
  }
  std::vector<Value> interval_elements(int) const override {
    std::vector<Value::Tuple> acc{{}};
    for (long long u : unit_) {
      std::vector<Value::Tuple> next;
      for (const auto& p : acc)
        for (long long v = 0; v <= u; ++v) {
          auto t = p;
          t.emplace_back(v);
          next.push_back(std::move(t));
        }
      acc = std::move(next);
    }
    std::vector<Value> out;
    for (auto& t : acc) out.emplace_back(std::move(t));
    return out;
  }
  std::string format(const Value& x) const override { return x.repr(); }
  std::string json_spec() const override {
    std::string u;
    for (size_t i = 0; i < unit_.size(); ++i) u += (i ? "," : "") + std::to_string(unit_[i]);
    return "{\"kind\":\"zk\",\"k\":" + std::to_string(unit_.size()) + ",\"unit\":[" + u + "]}";
  }

private:
  Value constant(long long v) const {
    Value::Tuple t(unit_.size(), Value(v));
    return Value(std::move(t));
  }
  const Value::Tuple& coords(const Value& x) const {
    require_element(x);
    return x.as_tuple();
  }
  template <typename F>
  Value zip(const Value& x, const Value& y, F op) const {
    const auto& a = coords(x);
    const auto& b = coords(y);
    Value::Tuple t;
    for (size_t i = 0; i < a.size(); ++i) t.emplace_back(op(a[i].as_int(), b[i].as_int()));
    return Value(std::move(t));
  }
  std::vector<long long> unit_;
};

class LexZ2Group final : public LGroupU {
public:
  LexZ2Group(long long u1, long long u2) : u1_(u1), u2_(u2) {
    if (u1_ < 0 || (u1_ == 0 && u2_ < 0)) fail(Errc::BadInput, "lex unit must be >= (0,0)");
  }

  std::string name() const override {
    return "ZlexZ(u=[" + std::to_string(u1_) + "," + std::to_string(u2_) + "])";
  }
  Value zero() const override { return Value::pair(Value(0LL), Value(0LL)); }
  Value unit() const override { return Value::pair(Value(u1_), Value(u2_)); }
  Value add(const Value& x, const Value& y) const override {
    return Value::pair(Value(fst(x) + fst(y)), Value(snd(x) + snd(y)));
  }
  Value neg(const Value& x) const override { return Value::pair(Value(-fst(x)), Value(-snd(x))); }
  bool leq(const Value& x, const Value& y) const override {
    if (fst(x) != fst(y)) return fst(x) < fst(y);
    return snd(x) <= snd(y);
  }
  Value inf(const Value& x, const Value& y) const override { return leq(x, y) ? x : y; }
  Value sup(const Value& x, const Value& y) const override { return leq(x, y) ? y : x; }
  std::optional<long long> unit_bound(const Value& x) const override {
    return std::abs(fst(x)) + 1;
  }
  bool contains(const Value& x) const override {
    return x.is_tuple() && x.as_tuple().size() == 2 && x.as_tuple()[0].is_int() &&
           x.as_tuple()[1].is_int();
  }
  Value sample(Rng& rng) const override {
    return Value::pair(Value(rng.range(-6, 6)), Value(rng.range(-20, 20)));
  }
  std::vector<Value> probes() const override {
    return {zero(), unit(), neg(unit()), Value::pair(Value(0LL), Value(1LL)),
            Value::pair(Value(0LL), Value(-1LL)), Value::pair(Value(1LL), Value(-3LL)),
            Value::pair(Value(-1LL), Value(5LL))};
  }
  std::string format(const Value& x) const override { return x.repr(); }
  std::string json_spec() const override {
    return "{\"kind\":\"lex2\",\"unit\":[" + std::to_string(u1_) + "," + std::to_string(u2_) + "]}";
  }

private:
  long long fst(const Value& x) const {
    require_element(x);
    return x.as_tuple()[0].as_int();
  }
  long long snd(const Value& x) const {
    require_element(x);
    return x.as_tuple()[1].as_int();
  }
  long long u1_, u2_;
};

class RationalVecGroup final : public LGroupU {
public:
  explicit RationalVecGroup(std::vector<Rat> unit) : unit_(std::move(unit)) {
    if (unit_.empty()) fail(Errc::BadInput, "rational group needs at least one coordinate");
    for (const Rat& u : unit_)
      if (!(Rat(0) < u)) fail(Errc::BadInput, "unit coordinates must be positive");
  }

  std::string name() const override {
    std::string u;
    for (size_t i = 0; i < unit_.size(); ++i) u += (i ? "," : "") + unit_[i].str();
    return "Q^" + std::to_string(unit_.size()) + "(u=[" + u + "])";
  }
  Value zero() const override {
    Value::Tuple t(unit_.size(), Value(Rat(0)));
    return Value(std::move(t));
  }
  Value unit() const override {
    Value::Tuple t;
    for (const Rat& u : unit_) t.emplace_back(u);
    return Value(std::move(t));
  }
  Value add(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Rat& a, const Rat& b) { return a + b; });
  }
  Value neg(const Value& x) const override {
    Value::Tuple t;
    for (const auto& c : coords(x)) t.emplace_back(-c.as_rat());
    return Value(std::move(t));
  }
  bool leq(const Value& x, const Value& y) const override {
    const auto& a = coords(x);
    const auto& b = coords(y);
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i].as_rat() <= b[i].as_rat())) return false;
    return true;
  }
  Value inf(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Rat& a, const Rat& b) { return rat_min(a, b); });
  }
  Value sup(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Rat& a, const Rat& b) { return rat_max(a, b); });
  }
  std::optional<long long> unit_bound(const Value& x) const override {
    long long n = 0;
    const auto& a = coords(x);
    for (size_t i = 0; i < a.size(); ++i) {
      Rat c = a[i].as_rat();
      if (c < Rat(0)) c = -c;
      n = std::max(n, rat_ceil(Rat(c.num * unit_[i].den, c.den * unit_[i].num)));
    }
    return n;
  }
  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.as_tuple().size() != unit_.size()) return false;
    for (const auto& c : x.as_tuple())
      if (!c.is_rat()) return false;
    return true;
  }
  Value sample(Rng& rng) const override {
    Value::Tuple t;
    for (size_t i = 0; i < unit_.size(); ++i) {
      const long long d = rng.range(1, 8);
      t.emplace_back(Rat(rng.range(-24, 24), d));
    }
    return Value(std::move(t));
  }
  std::vector<Value> probes() const override {
    std::vector<Value> out{zero(), unit(), neg(unit())};
    Value::Tuple half;
    for (const Rat& u : unit_) half.emplace_back(Rat(u.num, u.den * 2));
    out.emplace_back(std::move(half));
    return out;
  }
  std::string format(const Value& x) const override { return x.repr(); }
  std::string json_spec() const override {
    std::string u;
    for (size_t i = 0; i < unit_.size(); ++i) u += (i ? "," : "") + ("\"" + unit_[i].str() + "\"");
    return "{\"kind\":\"qk\",\"k\":" + std::to_string(unit_.size()) + ",\"unit\":[" + u + "]}";
  }

private:
  const Value::Tuple& coords(const Value& x) const {
    require_element(x);
    return x.as_tuple();
  }
  template <typename F>
  Value zip(const Value& x, const Value& y, F op) const {
    const auto& a = coords(x);
    const auto& b = coords(y);
    Value::Tuple t;
    for (size_t i = 0; i < a.size(); ++i) t.emplace_back(op(a[i].as_rat(), b[i].as_rat()));
    return Value(std::move(t));
  }
  std::vector<Rat> unit_;
};

}  // namespace

LPtr make_scaled_int(long long n) { return std::make_shared<ScaledIntGroup>(n); }

LPtr make_free_pointwise(std::vector<long long> unit) {
  return std::make_shared<FreePointwiseGroup>(std::move(unit));
}

LPtr make_lex_z2(long long u1, long long u2) { return std::make_shared<LexZ2Group>(u1, u2); }

LPtr make_rational_vec(std::vector<Rat> unit) {
  return std::make_shared<RationalVecGroup>(std::move(unit));
}

static bool same_structure(const LPtr& a, const LPtr& b) {
  return a == b || a->name() == b->name();
}

LHom l_identity(const LPtr& g) {
  return LHom{g, g, [](const Value& x) { return x; }, "id"};
}

LHom l_compose(const LHom& g, const LHom& f) {
  if (!same_structure(f.target, g.source))
    fail(Errc::SourceTargetMismatch,
         "cannot compose: " + f.target->name() + " vs " + g.source->name());
  auto fm = f.map;
  auto gm = g.map;
  return LHom{f.source, g.target, [fm, gm](const Value& x) { return gm(fm(x)); },
              g.label + "." + f.label};
}

std::vector<Value> element_pool(const LGroupU& g, long long budget, Rng& rng, bool* exhaustive) {
  if (exhaustive) *exhaustive = false;  // nontrivial carriers are infinite
  std::vector<Value> pool = g.probes();
  while (static_cast<long long>(pool.size()) < budget) pool.push_back(g.sample(rng));
  return pool;
}

Report check_lu_axioms(const LPtr& gp, const CheckOptions& opt) {
  const LGroupU& g = *gp;
  Report rep;
  rep.check = "lu-axioms";
  rep.subject = g.name();
  rep.seed = opt.seed;
  rep.mode = "sampled";
  Rng rng(opt.seed);
  const auto pool = element_pool(g, opt.budget, rng, nullptr);
  auto f1 = [&](const Value& x) { return "x=" + g.format(x); };
  auto f2 = [&](const Value& x, const Value& y) { return f1(x) + " y=" + g.format(y); };

  try {
    rep.checked += 1;
    if (!g.leq(g.zero(), g.unit())) {
      rep.fail_with("axiom 13 (0 <= u)", "u=" + g.format(g.unit()));
      return rep;
    }
    for (const auto& x : pool) {
      rep.checked += 4;
      if (!g.contains(g.neg(x))) {
        rep.fail_with("closure under neg", f1(x));
        return rep;
      }
      if (!g.eq(g.add(x, g.zero()), x)) {
        rep.fail_with("axiom 2 (x + 0 = x)", f1(x));
        return rep;
      }
      if (!g.eq(g.add(x, g.neg(x)), g.zero())) {
        rep.fail_with("axiom 3 (x + (-x) = 0)", f1(x));
        return rep;
      }
      if (!g.leq(x, x)) {
        rep.fail_with("axiom 5 (reflexivity)", f1(x));
        return rep;
      }
    }

    // Strong unit: every x >= 0 must sit below its certified multiple of u.
    for (const auto& x : pool) {
      for (const Value& c : {x, pos_part(g, x)}) {
        if (!g.leq(g.zero(), c)) continue;
        rep.checked += 1;
        const auto n = g.unit_bound(c);
        if (!n) {
          rep.mark_unknown("axiom 14 (strong unit)",
                           "NotStrong: no bound witness for x=" + g.format(c) +
                               "; unit not certified strong");
          continue;
        }
        if (!g.leq(c, g.scale(*n, g.unit()))) {
          rep.fail_with("axiom 14 (strong unit)",
                        f1(c) + " with bound n=" + std::to_string(*n) + ": x <= n*u fails");
          return rep;
        }
      }
    }

    auto binary = [&](const Value& x, const Value& y) {
      rep.checked += 6;
      const Value s = g.add(x, y);
      if (!g.contains(s)) {
        rep.fail_with("closure under +", f2(x, y));
        return;
      }
      if (!g.eq(s, g.add(y, x))) {
        rep.fail_with("axiom 4 (commutativity)", f2(x, y));
        return;
      }
      if (g.leq(x, y) && g.leq(y, x) && !g.eq(x, y)) {
        rep.fail_with("axiom 6 (antisymmetry)", f2(x, y));
        return;
      }
      const Value i = g.inf(x, y);
      const Value sv = g.sup(x, y);
      if (!g.contains(i) || !g.contains(sv)) {
        rep.fail_with("closure under inf/sup", f2(x, y));
        return;
      }
      if (!g.leq(i, x) || !g.leq(i, y)) {
        rep.fail_with("axiom 8 (inf is a lower bound)", f2(x, y) + " inf=" + g.format(i));
        return;
      }
      if (!g.leq(x, sv) || !g.leq(y, sv))
        rep.fail_with("axiom 10 (sup is an upper bound)", f2(x, y) + " sup=" + g.format(sv));
    };

    auto ternary = [&](const Value& x, const Value& y, const Value& z) {
      rep.checked += 5;
      if (!g.eq(g.add(x, g.add(y, z)), g.add(g.add(x, y), z))) {
        rep.fail_with("axiom 1 (associativity)", f2(x, y) + " z=" + g.format(z));
        return;
      }
      if (g.leq(x, y) && g.leq(y, z) && !g.leq(x, z)) {
        rep.fail_with("axiom 7 (transitivity)", f2(x, y) + " z=" + g.format(z));
        return;
      }
      if (g.leq(z, x) && g.leq(z, y) && !g.leq(z, g.inf(x, y))) {
        rep.fail_with("axiom 9 (inf is greatest lower bound)", f2(x, y) + " z=" + g.format(z));
        return;
      }
      if (g.leq(x, z) && g.leq(y, z) && !g.leq(g.sup(x, y), z)) {
        rep.fail_with("axiom 11 (sup is least upper bound)", f2(x, y) + " z=" + g.format(z));
        return;
      }
      if (g.leq(x, y) && !g.leq(g.add(z, x), g.add(z, y)))
        rep.fail_with("axiom 12 (translation invariance)", f2(x, y) + " t=" + g.format(z));
    };

    const size_t k = pool.size();
    for (size_t i = 0; i < k && rep.outcome != Outcome::Fail; ++i) {
      binary(pool[i], pool[(i * 7 + 3) % k]);
      if (rep.outcome == Outcome::Fail) break;
      ternary(pool[i], pool[(i * 5 + 1) % k], pool[(i * 11 + 2) % k]);
    }
    for (long long t = 0; t < opt.budget && rep.outcome != Outcome::Fail; ++t) {
      const Value x = g.sample(rng);
      const Value y = g.sample(rng);
      const Value z = g.sample(rng);
      binary(x, y);
      if (rep.outcome == Outcome::Fail) break;
      ternary(x, y, z);
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_l_hom(const LHom& h, const CheckOptions& opt) {
  Report rep;
  rep.check = "l-hom";
  rep.subject = (h.label.empty() ? std::string("h") : h.label) + ": " + h.source->name() + " -> " +
                h.target->name();
  rep.seed = opt.seed;
  rep.mode = "sampled";
  Rng rng(opt.seed);
  const LGroupU& s = *h.source;
  const LGroupU& t = *h.target;
  const auto pool = element_pool(s, opt.budget, rng, nullptr);
  try {
    rep.checked += 2;
    if (!t.eq(h(s.zero()), t.zero())) {
      rep.fail_with("hom preserves 0", "h(0)=" + t.format(h(s.zero())));
      return rep;
    }
    if (!t.eq(h(s.unit()), t.unit())) {
      rep.fail_with("hom preserves the unit", "h(u)=" + t.format(h(s.unit())));
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
      rep.checked += 4;
      const std::string at = "x=" + s.format(x) + " y=" + s.format(y);
      if (!t.eq(h(s.add(x, y)), t.add(h(x), h(y)))) {
        rep.fail_with("hom preserves +", at);
        return;
      }
      if (!t.eq(h(s.inf(x, y)), t.inf(h(x), h(y)))) {
        rep.fail_with("hom preserves inf", at);
        return;
      }
      if (!t.eq(h(s.sup(x, y)), t.sup(h(x), h(y)))) {
        rep.fail_with("hom preserves sup", at);
        return;
      }
      if (s.leq(x, y) && !t.leq(h(x), h(y))) rep.fail_with("hom preserves <=", at);
    };
    const size_t k = pool.size();
    for (size_t i = 0; i < k && rep.pass(); ++i) check_pair(pool[i], pool[(i * 7 + 3) % k]);
    for (long long i = 0; i < opt.budget && rep.pass(); ++i) check_pair(s.sample(rng), s.sample(rng));
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_torsion_free(const LPtr& gp, const CheckOptions& opt) {
  const LGroupU& g = *gp;
  Report rep;
  rep.check = "torsion-free";
  rep.subject = g.name();
  rep.seed = opt.seed;
  rep.mode = "sampled";
  Rng rng(opt.seed);
  const long long max_n = std::max<long long>(50, opt.budget / 4);
  const auto pool = element_pool(g, opt.budget, rng, nullptr);
  try {
    for (const auto& x : pool) {
      if (g.eq(x, g.zero())) continue;
      Value acc = g.zero();
      for (long long n = 1; n <= max_n; ++n) {
        acc = g.add(acc, x);
        rep.checked += 1;
        if (g.eq(acc, g.zero())) {
          rep.fail_with("torsion-freeness",
                        "x=" + g.format(x) + " has n*x = 0 at n=" + std::to_string(n));
          return rep;
        }
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  rep.note = "n up to " + std::to_string(max_n);
  return rep;
}

}  // namespace mundici
