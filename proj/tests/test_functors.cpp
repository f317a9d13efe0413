#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mundici/functors.hpp"
#include "mundici/errors.hpp"

using namespace mundici;

namespace {

Value rv(long long num, long long den = 1) { return Value(Rat(num, den)); }

}  // namespace

TEST_CASE("the unit interval of a group is an MV-algebra with truncated sum") {
  const MvPtr a = gamma(make_scaled_int(3));
  CHECK(a->name() == "Gamma(Z(u=3))");
  CHECK(a->zero() == Value(0));
  CHECK(a->one() == Value(3));
  REQUIRE(a->finite());
  CHECK(a->elements().size() == 4);
  CHECK(a->oplus(Value(2), Value(2)) == Value(3));   // truncation at u
  CHECK(a->oplus(Value(1), Value(1)) == Value(2));
  CHECK(a->neg(Value(1)) == Value(2));
  CHECK(a->odot(Value(2), Value(2)) == Value(1));    // dual truncation at 0
  CHECK(a->odot(Value(1), Value(1)) == Value(0));
  CHECK(a->leq(Value(1), Value(2)));
  CHECK(a->contains(Value(3)));
  CHECK(!a->contains(Value(4)));
  CHECK(!a->contains(Value(-1)));
  CHECK(check_mv_axioms(a).pass());
  CHECK_THROWS_AS(gamma(nullptr), Error);
  // derived carriers have no standalone JSON form
  CHECK_THROWS_AS(a->json_spec(), Error);
}

TEST_CASE("base accessors recover the construction or refuse") {
  const LPtr g = make_scaled_int(2);
  const MvPtr ga = gamma(g);
  CHECK(gamma_base(ga) == g);
  CHECK_THROWS_AS(gamma_base(make_chain(2)), Error);
  try {
    gamma_base(make_chain(2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SourceTargetMismatch);
  }
  const MvPtr a = make_chain(2);
  const LPtr la = l_group(a);
  CHECK(l_group_base(la) == a);
  CHECK_THROWS_AS(l_group_base(make_scaled_int(1)), Error);
  CHECK_THROWS_AS(l_group(nullptr), Error);
}

TEST_CASE("the difference-pair group over a chain") {
  const MvPtr l2 = make_chain(2);
  const LPtr g = l_group(l2);
  CHECK(g->name() == "L(L2)");
  const Value zero = g->zero();
  const Value unit = g->unit();
  CHECK(g->format(zero) == "[(0) | (0)]");
  CHECK(g->format(unit) == "[(1) | (0)]");
  CHECK(g->eq(g->add(unit, g->neg(unit)), zero));
  // cross-sum equality identifies [p+r, q+r] with [p, q]
  const Value half = make_pair_value(GoodSequence::single(l2, rv(1, 2)), GoodSequence::zero(l2));
  const Value padded = make_pair_value(
      GoodSequence::normalize(l2, {rv(1), rv(1, 2)}), GoodSequence::unit(l2));
  CHECK(g->eq(half, padded));
  CHECK(!g->eq(half, unit));
  CHECK(g->leq(half, unit));
  CHECK(!g->leq(unit, half));
  CHECK(g->eq(g->add(half, half), unit));
  CHECK(g->eq(g->sup(half, g->neg(half)), half));
  CHECK(g->unit_bound(padded) == 2);  // longest side of the representative
  CHECK(g->contains(half));
  CHECK(!g->contains(Value(1)));
  CHECK(!g->contains(Value::pair(Value(Value::Tuple{rv(1)}), Value(Value::Tuple{rv(1, 3)}))));
  REQUIRE(g->interval_enumerable());
  // [0, u] in L(L2) is a copy of L2
  CHECK(g->interval_elements(3).size() == 3);
}

TEST_CASE("greedy decomposition peels off unit-sized slices") {
  const LPtr z1 = make_scaled_int(1);
  CHECK(good_decompose(z1, Value(3)).str() == "(1,1,1)");
  CHECK(good_decompose(z1, Value(0)).is_zero());

  const LPtr z2 = make_scaled_int(2);
  CHECK(good_decompose(z2, Value(5)).str() == "(2,2,1)");

  const LPtr zz = make_free_pointwise({1, 1});
  CHECK(good_decompose(zz, Value::pair(Value(2), Value(1))).str() == "((1,1),(1,0))");

  CHECK_THROWS_AS(good_decompose(z1, Value(-1)), Error);
  try {
    good_decompose(z1, Value(-1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeElement);
    CHECK(std::string(e.what()).find("is not >= 0 in Z(u=1)") != std::string::npos);
  }

  // a caller-supplied target interval is reused
  const MvPtr into = gamma(z2);
  const GoodSequence s = good_decompose(z2, Value(3), into);
  CHECK(s.algebra() == into);
  CHECK(s.str() == "(2,1)");
}

TEST_CASE("phi is a verified isomorphism on finite carriers") {
  const IsoWitness w = phi(make_chain(2));
  CHECK(w.description == "phi: L2 -> Gamma(L(L2))");
  CHECK(w.report.pass());
  CHECK(w.report.mode == "exhaustive");
  CHECK(w.report.check == "phi-roundtrip");

  // forward sends a to the class of [(a), ()]; backward undoes it
  const MvPtr l2 = make_chain(2);
  const LPtr g = l_group(l2);
  const Value img = w.forward(rv(1, 2));
  CHECK(g->eq(img, make_pair_value(GoodSequence::single(l2, rv(1, 2)), GoodSequence::zero(l2))));
  CHECK(w.backward(img) == rv(1, 2));
  for (const auto& x : l2->elements()) CHECK(w.backward(w.forward(x)) == x);

  CHECK(phi(make_chain(4)).report.pass());
  CHECK(phi(make_product({make_chain(2), make_chain(3)})).report.pass());
  CheckOptions opt;
  opt.budget = 40;
  const IsoWitness qw = phi(make_rational_interval(), opt);
  CHECK(qw.report.pass());
  CHECK(qw.report.mode == "sampled");
  CHECK(phi(make_chang(), opt).report.pass());
}

TEST_CASE("psi and its inverse f are verified on the sampled carriers") {
  const LPtr z2 = make_scaled_int(2);
  const IsoWitness w = psi(z2);
  CHECK(w.description == "psi: Z(u=2) -> L(Gamma(Z(u=2)))");
  CHECK(w.report.pass());
  CHECK(w.report.mode == "sampled");
  CHECK(w.report.check == "psi-roundtrip");

  // 3 = 2 + 1 splits greedily; negative part is empty
  const LPtr lga = l_group(gamma(z2));
  const Value img = w.forward(Value(3));
  const MvPtr base = l_group_base(lga);
  CHECK(lga->eq(img, make_pair_value(
                         GoodSequence::normalize(base, {Value(2), Value(1)}),
                         GoodSequence::zero(base))));
  CHECK(w.backward(img) == Value(3));
  CHECK(w.backward(w.forward(Value(-5))) == Value(-5));
  CHECK(w.backward(lga->unit()) == Value(2));

  CHECK(psi(make_scaled_int(1)).report.pass());
  CheckOptions opt;
  opt.budget = 60;
  CHECK(psi(make_free_pointwise({1, 1}), opt).report.pass());
  CHECK(psi(make_lex_z2(1, 0), opt).report.pass());
  CHECK(psi(make_rational_vec({Rat(1)}), opt).report.pass());
}

TEST_CASE("naturality squares commute for honest homs") {
  const MvHom incl{make_chain(2), make_chain(4), [](const Value& x) { return x; }, "inclusion"};
  const Report rp = check_phi_naturality(incl);
  CHECK(rp.pass());
  CHECK(rp.check == "phi-naturality");
  CHECK(rp.subject == "inclusion: L2 -> L4");

  const LHom dbl{make_scaled_int(1), make_scaled_int(2),
                 [](const Value& x) { return Value(2 * x.as_int()); }, "double"};
  const Report rq = check_psi_naturality(dbl);
  CHECK(rq.pass());
  CHECK(rq.check == "psi-naturality");
}

TEST_CASE("interval restriction rejects non-unital group homs") {
  const LPtr z1 = make_scaled_int(1);
  const LHom stretch{z1, z1, [](const Value& x) { return Value(2 * x.as_int()); }, "stretch"};
  CHECK_THROWS_AS(gamma_hom(stretch), Error);
  try {
    gamma_hom(stretch);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ImageEscapesInterval);
    CHECK(std::string(e.what()).find("outside [0, u]") != std::string::npos);
  }
  const LHom dbl{z1, make_scaled_int(2), [](const Value& x) { return Value(2 * x.as_int()); },
                 "double"};
  const MvHom restricted = gamma_hom(dbl);
  CHECK(restricted.label == "gamma(double)");
  CHECK(check_mv_hom(restricted).pass());
  CHECK(restricted(Value(1)) == Value(2));
}

TEST_CASE("good-sequence lift of an algebra hom") {
  const MvHom incl{make_chain(2), make_chain(4), [](const Value& x) { return x; }, "inclusion"};
  const LHom lifted = l_hom(incl);
  CHECK(lifted.label == "l(inclusion)");
  CHECK(check_l_hom(lifted).pass());
  const Value u = lifted.source->unit();
  CHECK(lifted.target->eq(lifted(u), lifted.target->unit()));
}

TEST_CASE("chain groups agree with plain integer arithmetic") {
  for (long long n = 1; n <= 3; ++n) {
    const Report rep = check_chain_group_oracle(n);
    CHECK(rep.pass());
    CHECK(rep.mode == "exhaustive");
    CHECK(rep.check == "chain-group-oracle");
    CHECK(rep.subject == "L(L" + std::to_string(n) + ") ~ Z(u=" + std::to_string(n) + ")");
  }
}
