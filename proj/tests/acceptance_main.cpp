// Acceptance gate: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the CLI binary (wired in by CMake).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "mundici/errors.hpp"
#include "mundici/functors.hpp"
#include "mundici/json_io.hpp"
#include "mundici/logic.hpp"
#include "mundici/sheaf.hpp"
#include "mundici/zoo.hpp"

using namespace mundici;

namespace {

int failures = 0;

void criterion(int k, const std::string& label, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << label << "\n";
  if (!ok) ++failures;
}

bool guarded(int k, const std::string& label, bool (*body)(const std::string&)) {
  bool ok = false;
  try {
    ok = body(label);
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << "\n";
    ok = false;
  }
  criterion(k, label, ok);
  return ok;
}

std::string cli_path;

int run_cli(const std::string& args, std::string* out) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  out->clear();
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out->append(buf, n);
  const int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

bool report_matches_schema(const nlohmann::json& r) {
  if (!r.is_object()) return false;
  for (const char* key : {"check", "subject", "outcome", "pass", "mode", "checked", "witness"})
    if (!r.contains(key)) return false;
  if (!r["check"].is_string() || !r["subject"].is_string()) return false;
  if (!r["outcome"].is_string() || !r["pass"].is_boolean()) return false;
  const std::string oc = r["outcome"].get<std::string>();
  if (oc != "pass" && oc != "fail" && oc != "unknown") return false;
  if (r["pass"].get<bool>() != (oc == "pass")) return false;
  if (!r["mode"].is_string()) return false;
  const std::string mode = r["mode"].get<std::string>();
  if (mode != "exhaustive" && mode != "sampled") return false;
  if (!r["checked"].is_number_integer() || r["checked"].get<long long>() < 0) return false;
  if (r.contains("seed") != (mode == "sampled")) return false;
  if (r.contains("seed") && !r["seed"].is_number_integer()) return false;
  if (r.contains("note") && (!r["note"].is_string() || r["note"].get<std::string>().empty()))
    return false;
  const auto& w = r["witness"];
  if (!w.is_null()) {
    if (!w.is_object() || !w.contains("law") || !w.contains("detail")) return false;
    if (!w["law"].is_string() || !w["detail"].is_string()) return false;
  }
  return true;
}

bool c1_mv_axioms(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_algebras()) {
    const Report rep = check_mv_axioms(e.model.mv);
    ok = ok && rep.pass();
    if (e.model.mv->finite())
      ok = ok && rep.mode == "exhaustive";
    else
      ok = ok && rep.mode == "sampled";
  }
  return ok;
}

bool c2_lu_axioms(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_groups()) ok = ok && check_lu_axioms(e.model.lu).pass();
  const Report planted = check_lu_axioms(make_free_pointwise({1, 0}));
  ok = ok && planted.outcome == Outcome::Fail;
  ok = ok && planted.witness.has_value();
  ok = ok && planted.witness->law == "axiom 14 (strong unit)";
  ok = ok && planted.witness->detail.find("(0,1)") != std::string::npos;
  return ok;
}

bool c3_monoid(const std::string&) {
  const Report mono = check_monoid_laws(make_chain(2));
  const Report canc = check_cancellation(make_chain(2));
  bool ok = mono.pass() && mono.mode == "exhaustive" && mono.checked == 889;
  ok = ok && canc.pass() && canc.mode == "exhaustive" && canc.checked == 343;
  ok = ok && check_monoid_laws(make_chain(3)).pass();
  ok = ok && check_cancellation(make_chain(3)).pass();
  ok = ok && check_monoid_laws(make_chang()).pass();
  ok = ok && check_cancellation(make_chang()).pass();
  return ok;
}

bool c4_phi(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_algebras()) {
    const IsoWitness w = phi(e.model.mv);
    ok = ok && w.report.pass();
    if (e.model.mv->finite()) ok = ok && w.report.mode == "exhaustive";
  }
  return ok;
}

bool c5_psi(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_groups()) {
    const LPtr g = e.model.lu;
    const IsoWitness w = psi(g);
    ok = ok && w.report.pass();
    // the inverse sends the one-term unit sequence to the unit, exactly
    const MvPtr iv = gamma(g);
    const Value unit_pair =
        make_pair_value(GoodSequence::single(iv, g->unit()), GoodSequence::zero(iv));
    ok = ok && g->eq(w.backward(unit_pair), g->unit());
    ok = ok && g->eq(w.backward(w.forward(g->unit())), g->unit());
  }
  return ok;
}

bool c6_oracle(const std::string&) {
  bool ok = true;
  for (long long n = 1; n <= 4; ++n) {
    const Report rep = check_chain_group_oracle(n);
    ok = ok && rep.pass() && rep.mode == "exhaustive";
  }
  return ok;
}

bool c7_interpretation(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_groups()) {
    for (const Sequent& s : mv_axiom_sequents())
      ok = ok && check_interpretation_soundness(e.model.lu, s).pass();
    for (const Sequent& s : interval_sequents())
      ok = ok && check_sequent(e.model, s).pass();
  }
  return ok;
}

bool c8_torsion(const std::string&) {
  bool ok = true;
  for (const auto& e : zoo_groups()) ok = ok && check_torsion_free(e.model.lu).pass();
  const MvPtr l2 = make_chain(2);
  const MvPtr l3 = make_chain(3);
  ok = ok && l2->finite() && l3->finite();
  ok = ok && l2->elements().size() == 3 && l3->elements().size() == 4;
  ok = ok && l2->elements().size() != l3->elements().size();
  return ok;
}

bool c9_sheaves(const std::string&) {
  bool ok = true;
  ok = ok && validate_sheaf(zoo_mv_sheaf_sierpinski()).pass();
  ok = ok && validate_sheaf(zoo_mv_sheaf_chain3()).pass();
  ok = ok && validate_sheaf(zoo_l_sheaf_sierpinski()).pass();
  ok = ok && validate_sheaf(zoo_l_sheaf_chain3()).pass();
  ok = ok && check_sheaf_roundtrip(zoo_mv_sheaf_sierpinski()).pass();
  ok = ok && check_sheaf_roundtrip(zoo_mv_sheaf_chain3()).pass();
  ok = ok && check_sheaf_roundtrip(zoo_l_sheaf_sierpinski()).pass();
  ok = ok && check_sheaf_roundtrip(zoo_l_sheaf_chain3()).pass();

  const MvSheaf mv = zoo_mv_sheaf_sierpinski();
  const LSheaf lg = zoo_l_sheaf_sierpinski();
  ok = ok && check_sheaf_naturality(ContinuousMap::identity(mv.space), mv).pass();
  ok = ok && check_sheaf_naturality(ContinuousMap::identity(lg.space), lg).pass();
  ok = ok &&
       check_sheaf_naturality(ContinuousMap::constant(FiniteSpace::point(), mv.space, 1), mv)
           .pass();
  ok = ok &&
       check_sheaf_naturality(ContinuousMap::constant(FiniteSpace::point(), lg.space, 0), lg)
           .pass();

  const SpacePtr c2 = FiniteSpace::chain(2);
  const MvPtr s2 = make_chain(2);
  const MvPtr s4 = make_chain(4);
  const MvSheaf mv_target = make_mv_sheaf(
      c2, {s2, s4}, {{{0, 1}, MvHom{s2, s4, [](const Value& x) { return x; }, "inclusion"}}});
  const LPtr z1 = make_scaled_int(1);
  const LPtr z2 = make_scaled_int(2);
  const LSheaf l_target = make_l_sheaf(
      c2, {z1, z2},
      {{{0, 1}, LHom{z1, z2, [](const Value& x) { return Value(2 * x.as_int()); }, "scale 2"}}});
  const ContinuousMap collapse(FiniteSpace::chain(3), c2, {0, 1, 1}, "chain-collapse");
  ok = ok && check_sheaf_naturality(collapse, mv_target).pass();
  ok = ok && check_sheaf_naturality(collapse, l_target).pass();

  // one-point space: the sheaf-level functors are the classical ones
  const SpacePtr pt = FiniteSpace::point();
  const MvPtr l3 = make_chain(3);
  const MvSheaf one_mv{pt, {l3}, {}};
  ok = ok && l_group_base(l_sheaf(one_mv).stalks[0]) == l3;
  ok = ok && check_sheaf_roundtrip(one_mv).pass() == phi(l3).report.pass();
  const LSheaf one_l{pt, {z2}, {}};
  ok = ok && gamma_base(gamma_sheaf(one_l).stalks[0]) == z2;
  ok = ok && check_sheaf_roundtrip(one_l).pass() == psi(z2).report.pass();
  ok = ok && sections(one_mv, pt->whole())->elements().size() == l3->elements().size();

  const Report cmp = compare_section_interval(lg);
  ok = ok && cmp.pass() && !cmp.note.empty();
  return ok;
}

bool c10_cli(const std::string&) {
  std::string out;
  const int zoo_rc = run_cli("zoo --json", &out);
  bool ok = zoo_rc == 0;
  nlohmann::json j = nlohmann::json::parse(out, nullptr, false);
  ok = ok && !j.is_discarded() && j.is_object();
  if (!ok) return false;
  ok = ok && j.contains("command") && j["command"] == "zoo";
  ok = ok && j.contains("pass") && j["pass"].is_boolean() && j["pass"].get<bool>();
  ok = ok && j.contains("reports") && j["reports"].is_array() && !j["reports"].empty();
  if (!ok) return false;
  for (const auto& r : j["reports"]) {
    ok = ok && report_matches_schema(r);
    ok = ok && r["outcome"] == "pass";
  }

  // a planted defect must exit 1 and carry a witness
  const std::string planted_path = "acceptance_planted.json";
  {
    FILE* f = std::fopen(planted_path.c_str(), "w");
    if (!f) return false;
    std::fputs(
        "{\"kind\":\"finite\",\"size\":3,\"oplus\":[[0,0,2],[1,2,2],[2,2,2]],"
        "\"neg\":[2,1,0],\"zero\":0,\"label\":\"planted\"}",
        f);
    std::fclose(f);
  }
  std::string bad_out;
  const int bad_rc = run_cli("mv-axioms " + planted_path + " --json", &bad_out);
  std::remove(planted_path.c_str());
  ok = ok && bad_rc == 1;
  nlohmann::json bj = nlohmann::json::parse(bad_out, nullptr, false);
  ok = ok && !bj.is_discarded() && bj.is_object();
  if (!ok) return false;
  ok = ok && bj["pass"].is_boolean() && !bj["pass"].get<bool>();
  ok = ok && bj["reports"].is_array() && bj["reports"].size() == 1;
  const auto& r = bj["reports"][0];
  ok = ok && report_matches_schema(r);
  ok = ok && r["outcome"] == "fail" && !r["witness"].is_null();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  guarded(1, "MV axiom suite over the built-in carriers", c1_mv_axioms);
  guarded(2, "group axiom suite, strong unit witnessed and refuted", c2_lu_axioms);
  guarded(3, "good-sequence monoid laws and cancellation", c3_monoid);
  guarded(4, "phi roundtrip A -> Gamma(L(A))", c4_phi);
  guarded(5, "psi roundtrip G -> L(Gamma(G)) with exact inverse on the unit", c5_psi);
  guarded(6, "chain groups against the independent integer oracle", c6_oracle);
  guarded(7, "interpretation soundness and guarded interval sequents", c7_interpretation);
  guarded(8, "torsion-freeness and the finite chains telling carriers apart", c8_torsion);
  guarded(9, "sheaf validation, stalkwise roundtrips and pullback naturality", c9_sheaves);
  guarded(10, "CLI zoo schema and planted-defect exit code", c10_cli);

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
