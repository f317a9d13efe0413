#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mundici/lgroup.hpp"
#include "mundici/errors.hpp"

using namespace mundici;

namespace {

Value vec2(long long a, long long b) { return Value::pair(Value(a), Value(b)); }

Value qvec1(long long num, long long den = 1) {
  return Value(Value::Tuple{Value(Rat(num, den))});
}

// Z/4Z disguised as a group-with-unit; torsion on purpose.
class Mod4Group final : public LGroupU {
public:
  std::string name() const override { return "Z/4"; }
  Value zero() const override { return Value(0); }
  Value unit() const override { return Value(1); }
  Value add(const Value& x, const Value& y) const override {
    return Value((x.as_int() + y.as_int()) % 4);
  }
  Value neg(const Value& x) const override { return Value((4 - x.as_int()) % 4); }
  bool leq(const Value& x, const Value& y) const override { return x.as_int() <= y.as_int(); }
  Value inf(const Value& x, const Value& y) const override { return leq(x, y) ? x : y; }
  Value sup(const Value& x, const Value& y) const override { return leq(x, y) ? y : x; }
  std::optional<long long> unit_bound(const Value&) const override { return 4; }
  bool contains(const Value& x) const override {
    return x.is_int() && 0 <= x.as_int() && x.as_int() < 4;
  }
  Value sample(Rng& rng) const override { return Value(rng.below(4)); }
};

}  // namespace

TEST_CASE("integers with a scaled unit") {
  const LPtr g = make_scaled_int(3);
  CHECK(g->name() == "Z(u=3)");
  CHECK(g->zero() == Value(0));
  CHECK(g->unit() == Value(3));
  CHECK(g->add(Value(5), Value(-2)) == Value(3));
  CHECK(g->sub(Value(5), Value(-2)) == Value(7));
  CHECK(g->neg(Value(5)) == Value(-5));
  CHECK(g->scale(4, Value(2)) == Value(8));
  CHECK(g->scale(-3, Value(2)) == Value(-6));
  CHECK(g->scale(0, Value(9)) == Value(0));
  CHECK(g->inf(Value(2), Value(-1)) == Value(-1));
  CHECK(g->sup(Value(2), Value(-1)) == Value(2));
  CHECK(g->leq(Value(-1), Value(2)));
  CHECK(!g->leq(Value(2), Value(-1)));
  // smallest n with |x| <= n*u
  CHECK(g->unit_bound(Value(7)) == 3);
  CHECK(g->unit_bound(Value(-7)) == 3);
  CHECK(g->unit_bound(Value(6)) == 2);
  CHECK(g->unit_bound(Value(0)) == 0);
  REQUIRE(g->interval_enumerable());
  const auto iv = g->interval_elements(2);
  REQUIRE(iv.size() == 4);
  CHECK(iv.front() == Value(0));
  CHECK(iv.back() == Value(3));
  CHECK(g->json_spec() == "{\"kind\":\"zu\",\"n\":3}");
  CHECK(!g->contains(Value(Rat(1, 2))));
  CHECK_THROWS_AS(make_scaled_int(0), Error);
}

TEST_CASE("pointwise-ordered integer vectors") {
  const LPtr g = make_free_pointwise({1, 1});
  CHECK(g->name() == "Z^2(u=[1,1])");
  CHECK(g->add(vec2(3, -2), vec2(-1, 5)) == vec2(2, 3));
  CHECK(g->neg(vec2(3, -2)) == vec2(-3, 2));
  CHECK(g->leq(vec2(0, 0), vec2(1, 2)));
  // incomparable pair: neither direction holds
  CHECK(!g->leq(vec2(1, 0), vec2(0, 1)));
  CHECK(!g->leq(vec2(0, 1), vec2(1, 0)));
  CHECK(g->inf(vec2(1, 0), vec2(0, 1)) == vec2(0, 0));
  CHECK(g->sup(vec2(1, 0), vec2(0, 1)) == vec2(1, 1));
  CHECK(g->unit_bound(vec2(3, 5)) == 5);
  CHECK(g->unit_bound(vec2(-3, 5)) == 5);
  REQUIRE(g->interval_enumerable());
  CHECK(g->interval_elements(2).size() == 4);
  CHECK(g->json_spec() == "{\"kind\":\"zk\",\"k\":2,\"unit\":[1,1]}");
  CHECK_THROWS_AS(make_free_pointwise({}), Error);
  CHECK_THROWS_AS(make_free_pointwise({1, -1}), Error);
}

TEST_CASE("positive part, negative part and absolute value") {
  const LPtr g = make_free_pointwise({1, 1});
  const Value x = vec2(3, -2);
  CHECK(pos_part(*g, x) == vec2(3, 0));
  CHECK(neg_part(*g, x) == vec2(0, 2));
  CHECK(l_abs(*g, x) == vec2(3, 2));
  // x = pos_part - neg_part, and the parts are disjoint
  CHECK(g->sub(pos_part(*g, x), neg_part(*g, x)) == x);
  CHECK(g->inf(pos_part(*g, x), neg_part(*g, x)) == g->zero());
}

TEST_CASE("lexicographically ordered pairs") {
  const LPtr g = make_lex_z2(1, 0);
  CHECK(g->name() == "ZlexZ(u=[1,0])");
  // the first coordinate dominates, so the order is total
  CHECK(g->leq(vec2(0, 5), vec2(1, -100)));
  CHECK(!g->leq(vec2(1, -100), vec2(0, 5)));
  CHECK(g->leq(vec2(0, -3), vec2(0, 5)));
  CHECK(g->inf(vec2(0, 5), vec2(1, -100)) == vec2(0, 5));
  CHECK(g->sup(vec2(0, 5), vec2(1, -100)) == vec2(1, -100));
  CHECK(g->unit_bound(vec2(2, -7)) == 3);
  CHECK(g->unit_bound(vec2(0, 9)) == 1);
  CHECK(!g->interval_enumerable());
  CHECK_THROWS_AS(g->interval_elements(3), Error);
  try {
    g->interval_elements(3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvariantViolation);
  }
  CHECK(g->json_spec() == "{\"kind\":\"lex2\",\"unit\":[1,0]}");
  CHECK_THROWS_AS(make_lex_z2(-1, 0), Error);
  CHECK_THROWS_AS(make_lex_z2(0, -1), Error);
}

TEST_CASE("rational vectors") {
  const LPtr g = make_rational_vec({Rat(1)});
  CHECK(g->name() == "Q^1(u=[1])");
  CHECK(g->add(qvec1(1, 2), qvec1(1, 3)) == qvec1(5, 6));
  CHECK(g->unit_bound(qvec1(7, 2)) == 4);
  CHECK(g->unit_bound(qvec1(-7, 2)) == 4);
  CHECK(g->unit_bound(qvec1(0)) == 0);
  // carrier is 1-tuples of rationals, not bare numbers
  CHECK(g->contains(qvec1(1, 2)));
  CHECK(!g->contains(Value(Rat(1, 2))));
  CHECK(!g->contains(Value(1)));
  CHECK(g->probes().size() == 4);  // 0, u, -u, u/2
  CHECK(g->json_spec() == "{\"kind\":\"qk\",\"k\":1,\"unit\":[\"1\"]}");
  CHECK_THROWS_AS(make_rational_vec({}), Error);
  CHECK_THROWS_AS(make_rational_vec({Rat(0)}), Error);
  CHECK_THROWS_AS(make_rational_vec({Rat(-1, 2)}), Error);
}

TEST_CASE("axiom check passes on the healthy carriers") {
  CheckOptions opt;
  opt.budget = 80;
  for (const LPtr& g : {make_scaled_int(1), make_scaled_int(4), make_free_pointwise({1, 1}),
                        make_lex_z2(1, 0), make_rational_vec({Rat(1)})}) {
    const Report rep = check_lu_axioms(g, opt);
    CHECK(rep.pass());
    CHECK(rep.mode == "sampled");
    CHECK(rep.subject == g->name());
  }
}

TEST_CASE("a unit with a zero coordinate is caught as not strong") {
  // no multiple of (1,0) dominates (0,1); the bound certificate ignores the
  // dead coordinate and the check turns that into a concrete failure
  const Report rep = check_lu_axioms(make_free_pointwise({1, 0}));
  CHECK(rep.outcome == Outcome::Fail);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->law == "axiom 14 (strong unit)");
  CHECK(rep.witness->detail == "x=(0,1) with bound n=0: x <= n*u fails");
}

TEST_CASE("hom check requires the unit to land on the unit") {
  const LPtr z1 = make_scaled_int(1);
  const LPtr z2 = make_scaled_int(2);
  const LHom bad{z1, z2, [](const Value& x) { return x; }, "embed"};
  const Report rb = check_l_hom(bad);
  CHECK(rb.outcome == Outcome::Fail);
  REQUIRE(rb.witness.has_value());
  CHECK(rb.witness->law == "hom preserves the unit");
  CHECK(rb.witness->detail == "h(u)=1");
  CHECK(rb.subject == "embed: Z(u=1) -> Z(u=2)");

  const LHom dbl{z1, z2, [](const Value& x) { return Value(2 * x.as_int()); }, "double"};
  const Report rd = check_l_hom(dbl);
  CHECK(rd.pass());
  CHECK(rd.mode == "sampled");
}

TEST_CASE("hom composition and identity") {
  const LPtr z1 = make_scaled_int(1);
  const LPtr z2 = make_scaled_int(2);
  const LPtr z4 = make_scaled_int(4);
  const LHom f{z1, z2, [](const Value& x) { return Value(2 * x.as_int()); }, "f"};
  const LHom g{z2, z4, [](const Value& x) { return Value(2 * x.as_int()); }, "g"};
  const LHom gf = l_compose(g, f);
  CHECK(gf.label == "g.f");
  CHECK(gf(Value(3)) == Value(12));
  CHECK(check_l_hom(gf).pass());
  CHECK_THROWS_AS(l_compose(f, g), Error);
  const LHom id = l_identity(z2);
  CHECK(id.label == "id");
  CHECK(check_l_hom(id).pass());
}

TEST_CASE("torsion-freeness holds for the healthy carriers and not mod 4") {
  CHECK(check_torsion_free(make_scaled_int(1)).pass());
  CHECK(check_torsion_free(make_free_pointwise({1, 1})).pass());
  CHECK(check_torsion_free(make_rational_vec({Rat(1)})).pass());
  const Report ok = check_torsion_free(make_lex_z2(1, 0));
  CHECK(ok.pass());
  CHECK(ok.note == "n up to 50");

  const Report bad = check_torsion_free(std::make_shared<Mod4Group>());
  CHECK(bad.outcome == Outcome::Fail);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->law == "torsion-freeness");
  CHECK(bad.witness->detail == "x=1 has n*x = 0 at n=4");
}

TEST_CASE("default hooks and membership guards") {
  const LPtr g = make_lex_z2(1, 0);
  CHECK_THROWS_AS(g->add(Value(3), vec2(0, 0)), Error);
  try {
    g->add(Value(3), vec2(0, 0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ElementNotInCarrier);
  }
  // group element pools are never exhaustive
  Rng rng(7);
  bool exhaustive = true;
  const auto pool = element_pool(*make_scaled_int(2), 30, rng, &exhaustive);
  CHECK(!exhaustive);
  CHECK(pool.size() == 30);
  for (const auto& v : pool) CHECK(v.is_int());
}
