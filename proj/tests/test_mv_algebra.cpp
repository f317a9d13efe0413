#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mundici/mv_algebra.hpp"
#include "mundici/errors.hpp"

using namespace mundici;

namespace {

Value rv(long long num, long long den = 1) { return Value(Rat(num, den)); }

}  // namespace

TEST_CASE("chain operations match the direct rational formulas") {
  const MvPtr a = make_chain(3);
  const auto elems = a->elements();
  REQUIRE(elems.size() == 4);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const Rat rx = x.as_rat();
      const Rat ry = y.as_rat();
      CHECK(a->oplus(x, y).as_rat() == rat_min(Rat(1), rx + ry));
      CHECK(a->odot(x, y).as_rat() == rat_max(Rat(0), rx + ry - Rat(1)));
      CHECK(a->leq(x, y) == (rx <= ry));
      CHECK(a->sup(x, y).as_rat() == rat_max(rx, ry));
      CHECK(a->inf(x, y).as_rat() == rat_min(rx, ry));
    }
  for (const auto& x : elems) CHECK(a->neg(x).as_rat() == Rat(1) - x.as_rat());
  CHECK(a->one() == rv(1));
  CHECK(a->zero() == rv(0));
}

TEST_CASE("derived-operation overrides agree with the defining formulas") {
  // The base-class definitions expand through oplus/neg only; every override
  // must coincide with them pointwise.
  const MvPtr a = make_chain(4);
  const auto elems = a->elements();
  for (const auto& x : elems)
    for (const auto& y : elems) {
      CHECK(a->eq(a->odot(x, y), a->neg(a->oplus(a->neg(x), a->neg(y)))));
      CHECK(a->leq(x, y) == a->eq(a->oplus(a->neg(x), y), a->one()));
      CHECK(a->eq(a->sup(x, y), a->oplus(a->odot(x, a->neg(y)), y)));
      CHECK(a->eq(a->inf(x, y), a->odot(x, a->oplus(a->neg(x), y))));
      // free-function forms delegate to the same operations
      CHECK(a->eq(odot(*a, x, y), a->odot(x, y)));
      CHECK(mv_leq(*a, x, y) == a->leq(x, y));
      CHECK(a->eq(mv_sup(*a, x, y), a->sup(x, y)));
      CHECK(a->eq(mv_inf(*a, x, y), a->inf(x, y)));
    }
}

TEST_CASE("axiom check passes exhaustively on small chains with known counts") {
  const Report r1 = check_mv_axioms(make_chain(1));
  CHECK(r1.pass());
  CHECK(r1.mode == "exhaustive");
  CHECK(r1.checked == 28);
  CHECK(r1.subject == "L1");
  CHECK(!r1.witness);

  const Report r2 = check_mv_axioms(make_chain(2));
  CHECK(r2.pass());
  CHECK(r2.mode == "exhaustive");
  CHECK(r2.checked == 66);
}

TEST_CASE("axiom check passes on products and parametric carriers") {
  const Report prod = check_mv_axioms(make_product({make_chain(2), make_chain(3)}));
  CHECK(prod.pass());
  CHECK(prod.mode == "exhaustive");
  CHECK(prod.subject == "L2xL3");

  CheckOptions opt;
  opt.budget = 120;
  const Report chang = check_mv_axioms(make_chang(), opt);
  CHECK(chang.pass());
  CHECK(chang.mode == "sampled");

  const Report q = check_mv_axioms(make_rational_interval(), opt);
  CHECK(q.pass());
  CHECK(q.mode == "sampled");
  CHECK(q.subject == "Q[0,1]");
}

TEST_CASE("truncated pair carrier has the expected arithmetic") {
  const MvPtr c = make_chang();
  const Value z = Value::pair(Value(0), Value(0));
  const Value one = Value::pair(Value(1), Value(0));
  CHECK(c->zero() == z);
  CHECK(c->one() == one);
  CHECK(c->oplus(Value::pair(Value(0), Value(1)), Value::pair(Value(0), Value(2))) ==
        Value::pair(Value(0), Value(3)));
  CHECK(c->neg(Value::pair(Value(0), Value(3))) == Value::pair(Value(1), Value(-3)));
  CHECK(c->neg(one) == z);
  CHECK(c->oplus(Value::pair(Value(1), Value(-2)), Value::pair(Value(0), Value(1))) ==
        Value::pair(Value(1), Value(-1)));
  // sums that reach or pass the top collapse to it
  CHECK(c->oplus(Value::pair(Value(1), Value(-1)), Value::pair(Value(1), Value(-1))) == one);
  CHECK(c->oplus(Value::pair(Value(0), Value(5)), one) == one);
  CHECK(c->contains(Value::pair(Value(0), Value(7))));
  CHECK(c->contains(Value::pair(Value(1), Value(-7))));
  CHECK(!c->contains(Value::pair(Value(0), Value(-1))));
  CHECK(!c->contains(Value::pair(Value(1), Value(1))));
  CHECK(!c->contains(Value(0)));
  CHECK(!c->finite());
  // infinitesimals: k copies of (0,1) never reach the top
  Value acc = z;
  for (int i = 0; i < 40; ++i) acc = c->oplus(acc, Value::pair(Value(0), Value(1)));
  CHECK(acc == Value::pair(Value(0), Value(40)));
  CHECK(mv_leq(*c, acc, c->neg(acc)));
}

TEST_CASE("a corrupted finite table is rejected with a concrete witness") {
  // index model of the three-element chain, with one oplus entry broken
  std::vector<std::vector<int>> op = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  std::vector<int> ng = {2, 1, 0};
  op[0][1] = 0;  // oplus(#0,#1) no longer matches oplus(#1,#0)
  const Report rep = check_mv_axioms(make_finite_table(op, ng, 0, "planted"));
  CHECK(!rep.pass());
  CHECK(rep.outcome == Outcome::Fail);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->law == "axiom 2 (commutativity)");
  CHECK(rep.witness->detail == "x=#0 y=#1");
  CHECK(rep.subject == "planted");
}

TEST_CASE("a broken involution is caught in the unary pass") {
  const Report rep = check_mv_axioms(
      make_finite_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {2, 2, 0}, 0));
  CHECK(rep.outcome == Outcome::Fail);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->law == "axiom 4 (neg neg x = x)");
  CHECK(rep.witness->detail == "x=#1");
}

TEST_CASE("finite table construction validates shape only") {
  CHECK_THROWS_AS(make_finite_table({}, {}, 0), Error);                      // empty carrier
  CHECK_THROWS_AS(make_finite_table({{0}}, {0, 0}, 0), Error);               // row count
  CHECK_THROWS_AS(make_finite_table({{0, 0}, {0}}, {0, 0}, 0), Error);       // ragged
  CHECK_THROWS_AS(make_finite_table({{0, 2}, {0, 0}}, {0, 0}, 0), Error);    // entry range
  CHECK_THROWS_AS(make_finite_table({{0, 0}, {0, 0}}, {0, 2}, 0), Error);    // neg range
  CHECK_THROWS_AS(make_finite_table({{0, 0}, {0, 0}}, {0, 0}, 5), Error);    // zero index
  // shape-valid but semantically broken tables construct fine
  const MvPtr bad = make_finite_table({{1, 1}, {1, 1}}, {0, 1}, 0);
  CHECK(bad->contains(Value(1)));
  CHECK(!check_mv_axioms(bad).pass());
}

TEST_CASE("hom check accepts the chain inclusion and rejects a collapse") {
  const MvPtr l2 = make_chain(2);
  const MvPtr l4 = make_chain(4);
  const MvHom incl{l2, l4, [](const Value& x) { return x; }, "inclusion"};
  const Report ok = check_mv_hom(incl);
  CHECK(ok.pass());
  CHECK(ok.mode == "exhaustive");
  CHECK(ok.checked == 16);
  CHECK(ok.subject == "inclusion: L2 -> L4");

  const MvHom collapse{l2, l2, [l2](const Value&) { return l2->zero(); }, "to-zero"};
  const Report bad = check_mv_hom(collapse);
  CHECK(bad.outcome == Outcome::Fail);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->law == "hom preserves neg");
  CHECK(bad.witness->detail == "x=0");
}

TEST_CASE("hom composition checks endpoint compatibility") {
  const MvPtr l2 = make_chain(2);
  const MvPtr l3 = make_chain(3);
  const MvPtr l4 = make_chain(4);
  const MvHom f{l2, l4, [](const Value& x) { return x; }, "f"};
  const MvHom g{l4, l4, [](const Value& x) { return x; }, "g"};
  const MvHom gf = mv_compose(g, f);
  CHECK(gf.label == "g.f");
  CHECK(gf.source == l2);
  CHECK(gf.target == l4);
  CHECK(gf(rv(1, 2)) == rv(1, 2));

  const MvHom h{l3, l3, [](const Value& x) { return x; }, "h"};
  CHECK_THROWS_AS(mv_compose(h, f), Error);
  try {
    mv_compose(h, f);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SourceTargetMismatch);
  }
  CHECK(mv_identity(l2).label == "id");
}

TEST_CASE("element pools are exhaustive exactly on finite carriers") {
  Rng rng(1);
  bool exhaustive = false;
  const auto finite = element_pool(*make_chain(3), 200, rng, &exhaustive);
  CHECK(exhaustive);
  CHECK(finite.size() == 4);

  const auto sampled = element_pool(*make_rational_interval(), 50, rng, &exhaustive);
  CHECK(!exhaustive);
  CHECK(sampled.size() == 50);
  // probes lead the stream
  CHECK(sampled[0] == rv(0));
  CHECK(sampled[1] == rv(1));

  const auto chang = element_pool(*make_chang(), 50, rng, &exhaustive);
  CHECK(!exhaustive);
  CHECK(chang.size() == 50);
  for (const auto& v : chang) CHECK(make_chang()->contains(v));
}

TEST_CASE("products work componentwise") {
  const MvPtr p = make_product({make_chain(2), make_chain(3)});
  CHECK(p->name() == "L2xL3");
  CHECK(p->finite());
  CHECK(p->elements().size() == 12);
  const Value x = Value::pair(rv(1, 2), rv(1, 3));
  const Value y = Value::pair(rv(1, 2), rv(1));
  CHECK(p->oplus(x, y) == Value::pair(rv(1), rv(1)));
  CHECK(p->neg(x) == Value::pair(rv(1, 2), rv(2, 3)));
  CHECK(p->leq(x, y));
  CHECK(!p->leq(y, x));
  CHECK(p->inf(x, y) == x);
  CHECK(p->sup(x, y) == y);
  CHECK(!p->contains(Value::pair(rv(1, 3), rv(1, 3))));  // 1/3 not in L2
  CHECK(p->probes().size() == 4);
  CHECK_THROWS_AS(make_product({}), Error);
}

TEST_CASE("carrier membership is enforced on operations") {
  const MvPtr a = make_chain(2);
  CHECK_THROWS_AS(a->oplus(rv(1, 3), rv(0)), Error);
  try {
    a->oplus(rv(1, 3), rv(0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ElementNotInCarrier);
    CHECK(std::string(e.what()).find("is not in L2") != std::string::npos);
  }
  CHECK_THROWS_AS(make_chain(0), Error);
  CHECK_THROWS_AS(make_chain(-3), Error);
}
