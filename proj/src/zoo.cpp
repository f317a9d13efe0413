#include "mundici/zoo.hpp"

#include "mundici/errors.hpp"
#include "mundici/functors.hpp"
#include "mundici/good_sequence.hpp"

namespace mundici {

std::vector<ZooEntry> zoo_algebras() {
  std::vector<ZooEntry> out;
  for (long long n = 1; n <= 6; ++n)
    out.push_back({"L" + std::to_string(n), Model::of(make_chain(n))});
  out.push_back({"L2xL3", Model::of(make_product({make_chain(2), make_chain(3)}))});
  out.push_back({"Chang", Model::of(make_chang())});
  out.push_back({"Q", Model::of(make_rational_interval())});
  return out;
}

std::vector<ZooEntry> zoo_groups() {
  std::vector<ZooEntry> out;
  for (long long n = 1; n <= 4; ++n)
    out.push_back({"Z" + std::to_string(n), Model::of(make_scaled_int(n))});
  out.push_back({"ZxZ", Model::of(make_free_pointwise({1, 1}))});
  out.push_back({"ZlexZ", Model::of(make_lex_z2(1, 0))});
  out.push_back({"Q1", Model::of(make_rational_vec({Rat(1)}))});
  return out;
}

namespace {

MvHom passthrough_mv(const MvPtr& src, const MvPtr& dst, std::string label) {
  return MvHom{src, dst, [](const Value& x) { return x; }, std::move(label)};
}

LHom scaling_l(const LPtr& src, const LPtr& dst, long long m) {
  return LHom{src, dst, [dst, m](const Value& x) { return dst->scale(m, x); },
              "scale " + std::to_string(m)};
}

MvSheaf mv_sheaf_chain2() {
  const SpacePtr space = FiniteSpace::chain(2);
  std::vector<MvPtr> stalks{make_chain(2), make_chain(4)};
  std::map<std::pair<int, int>, MvHom> r;
  r.emplace(std::make_pair(0, 1), passthrough_mv(stalks[0], stalks[1], "inclusion"));
  return make_mv_sheaf(space, std::move(stalks), std::move(r));
}

LSheaf l_sheaf_chain2() {
  const SpacePtr space = FiniteSpace::chain(2);
  std::vector<LPtr> stalks{make_scaled_int(1), make_scaled_int(2)};
  std::map<std::pair<int, int>, LHom> r;
  r.emplace(std::make_pair(0, 1), scaling_l(stalks[0], stalks[1], 2));
  return make_l_sheaf(space, std::move(stalks), std::move(r));
}

}  // namespace

MvSheaf zoo_mv_sheaf_sierpinski() {
  const SpacePtr space = FiniteSpace::sierpinski();
  std::vector<MvPtr> stalks{make_chain(2), make_chain(4)};
  std::map<std::pair<int, int>, MvHom> r;
  r.emplace(std::make_pair(0, 1), passthrough_mv(stalks[0], stalks[1], "inclusion"));
  return make_mv_sheaf(space, std::move(stalks), std::move(r));
}

MvSheaf zoo_mv_sheaf_chain3() {
  const SpacePtr space = FiniteSpace::chain(3);
  std::vector<MvPtr> stalks{make_chain(2), make_chain(4), make_chain(8)};
  std::map<std::pair<int, int>, MvHom> r;
  r.emplace(std::make_pair(0, 1), passthrough_mv(stalks[0], stalks[1], "inclusion"));
  r.emplace(std::make_pair(1, 2), passthrough_mv(stalks[1], stalks[2], "inclusion"));
  r.emplace(std::make_pair(0, 2), passthrough_mv(stalks[0], stalks[2], "inclusion"));
  return make_mv_sheaf(space, std::move(stalks), std::move(r));
}

LSheaf zoo_l_sheaf_sierpinski() {
  const SpacePtr space = FiniteSpace::sierpinski();
  std::vector<LPtr> stalks{make_scaled_int(1), make_scaled_int(2)};
  std::map<std::pair<int, int>, LHom> r;
  r.emplace(std::make_pair(0, 1), scaling_l(stalks[0], stalks[1], 2));
  return make_l_sheaf(space, std::move(stalks), std::move(r));
}

LSheaf zoo_l_sheaf_chain3() {
  const SpacePtr space = FiniteSpace::chain(3);
  std::vector<LPtr> stalks{make_scaled_int(1), make_scaled_int(2), make_scaled_int(4)};
  std::map<std::pair<int, int>, LHom> r;
  r.emplace(std::make_pair(0, 1), scaling_l(stalks[0], stalks[1], 2));
  r.emplace(std::make_pair(1, 2), scaling_l(stalks[1], stalks[2], 2));
  r.emplace(std::make_pair(0, 2), scaling_l(stalks[0], stalks[2], 4));
  return make_l_sheaf(space, std::move(stalks), std::move(r));
}

std::vector<Report> run_zoo(const CheckOptions& opt) {
  std::vector<Report> out;
  const auto algebras = zoo_algebras();
  const auto groups = zoo_groups();

  for (const auto& e : algebras) out.push_back(check_mv_axioms(e.model.mv, opt));
  for (const auto& e : groups) out.push_back(check_lu_axioms(e.model.lu, opt));
  for (const auto& e : groups) out.push_back(check_torsion_free(e.model.lu, opt));

  for (const auto& key : {"L2", "L3", "Chang"}) {
    for (const auto& e : algebras) {
      if (e.key != key) continue;
      out.push_back(check_monoid_laws(e.model.mv, opt));
      out.push_back(check_cancellation(e.model.mv, opt));
    }
  }

  for (const auto& e : algebras) out.push_back(phi(e.model.mv, opt).report);
  for (const auto& e : groups) out.push_back(psi(e.model.lu, opt).report);
  for (long long n = 1; n <= 4; ++n) out.push_back(check_chain_group_oracle(n, opt));

  const auto axioms = mv_axiom_sequents();
  for (const auto& e : groups)
    for (const auto& s : axioms) out.push_back(check_interpretation_soundness(e.model.lu, s, opt));
  for (const auto& e : groups)
    for (const auto& s : interval_sequents()) out.push_back(check_sequent(e.model, s, opt));

  {
    Report d;
    d.check = "distinguishable";
    d.subject = "L2 vs L3";
    d.mode = "exhaustive";
    d.seed = opt.seed;
    const size_t a = make_chain(2)->elements().size();
    const size_t b = make_chain(3)->elements().size();
    d.checked = 1;
    if (a == b)
      d.fail_with("carrier sizes differ", "both have " + std::to_string(a) + " elements");
    else
      d.note = "carriers have " + std::to_string(a) + " and " + std::to_string(b) +
               " elements; no bijection exists";
    out.push_back(d);
  }

  const MvSheaf ms = zoo_mv_sheaf_sierpinski();
  const MvSheaf mc = zoo_mv_sheaf_chain3();
  const LSheaf ls = zoo_l_sheaf_sierpinski();
  const LSheaf lc = zoo_l_sheaf_chain3();
  out.push_back(validate_sheaf(ms, opt));
  out.push_back(validate_sheaf(mc, opt));
  out.push_back(validate_sheaf(ls, opt));
  out.push_back(validate_sheaf(lc, opt));
  out.push_back(check_sheaf_roundtrip(ms, opt));
  out.push_back(check_sheaf_roundtrip(mc, opt));
  out.push_back(check_sheaf_roundtrip(ls, opt));
  out.push_back(check_sheaf_roundtrip(lc, opt));

  out.push_back(check_sheaf_naturality(ContinuousMap::identity(ms.space), ms, opt));
  out.push_back(
      check_sheaf_naturality(ContinuousMap::constant(FiniteSpace::point(), ms.space, 1), ms, opt));
  {
    const MvSheaf m2 = mv_sheaf_chain2();
    const ContinuousMap collapse(FiniteSpace::chain(3), m2.space, {0, 1, 1}, "chain-collapse");
    out.push_back(check_sheaf_naturality(collapse, m2, opt));
  }
  out.push_back(check_sheaf_naturality(ContinuousMap::identity(ls.space), ls, opt));
  out.push_back(
      check_sheaf_naturality(ContinuousMap::constant(FiniteSpace::point(), ls.space, 1), ls, opt));
  {
    const LSheaf l2 = l_sheaf_chain2();
    const ContinuousMap collapse(FiniteSpace::chain(3), l2.space, {0, 1, 1}, "chain-collapse");
    out.push_back(check_sheaf_naturality(collapse, l2, opt));
  }

  out.push_back(compare_section_interval(ls, opt));
  out.push_back(compare_section_interval(lc, opt));
  return out;
}

}  // namespace mundici
