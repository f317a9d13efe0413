#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "mundici/json_io.hpp"
#include "mundici/errors.hpp"

using namespace mundici;

namespace {

void expect_bad(const std::string& text, const std::string& needle, bool mv = true) {
  try {
    if (mv)
      mv_algebra_from_json(text);
    else
      l_group_from_json(text);
    CHECK_MESSAGE(false, ("expected rejection: " + text));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadInput);
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  (std::string("got: ") + e.what()));
  }
}

void expect_bad_sheaf(const std::string& text, const std::string& needle) {
  try {
    sheaf_from_json(text);
    CHECK_MESSAGE(false, ("expected rejection: " + text));
  } catch (const Error& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  (std::string("got: ") + e.what()));
  }
}

}  // namespace

TEST_CASE("every documented carrier kind parses and round-trips") {
  const MvPtr chain = mv_algebra_from_json("{\"kind\":\"chain\",\"n\":3}");
  CHECK(chain->name() == "L3");
  CHECK(mv_algebra_from_json(chain->json_spec())->name() == "L3");

  CHECK(mv_algebra_from_json("{\"kind\":\"interval\"}")->name() == "Q[0,1]");
  CHECK(mv_algebra_from_json("{\"kind\":\"chang\"}")->name() == "Chang");

  const MvPtr prod = mv_algebra_from_json(
      "{\"kind\":\"product\",\"factors\":[{\"kind\":\"chain\",\"n\":2},{\"kind\":\"chain\",\"n\":3}]}");
  CHECK(prod->name() == "L2xL3");
  CHECK(mv_algebra_from_json(prod->json_spec())->name() == "L2xL3");

  const std::string table =
      "{\"kind\":\"finite\",\"size\":2,\"oplus\":[[0,1],[1,1]],\"neg\":[1,0],"
      "\"zero\":0,\"label\":\"two\"}";
  const MvPtr fin = mv_algebra_from_json(table);
  CHECK(fin->name() == "two");
  CHECK(fin->elements().size() == 2);
  const MvPtr fin2 = mv_algebra_from_json(fin->json_spec());
  CHECK(fin2->name() == "two");
  CHECK(check_mv_axioms(fin2).pass());

  const LPtr zu = l_group_from_json("{\"kind\":\"zu\",\"n\":3}");
  CHECK(zu->name() == "Z(u=3)");
  CHECK(l_group_from_json(zu->json_spec())->name() == "Z(u=3)");

  const LPtr zk = l_group_from_json("{\"kind\":\"zk\",\"k\":2,\"unit\":[1,1]}");
  CHECK(zk->name() == "Z^2(u=[1,1])");
  CHECK(l_group_from_json(zk->json_spec())->name() == "Z^2(u=[1,1])");

  const LPtr lex = l_group_from_json("{\"kind\":\"lex2\",\"unit\":[1,0]}");
  CHECK(lex->name() == "ZlexZ(u=[1,0])");
  CHECK(l_group_from_json(lex->json_spec())->name() == lex->name());

  // rational units accept integers and "p/q" strings
  const LPtr qk = l_group_from_json("{\"kind\":\"qk\",\"k\":2,\"unit\":[1,\"3/2\"]}");
  CHECK(qk->name() == "Q^2(u=[1,3/2])");
  CHECK(l_group_from_json(qk->json_spec())->name() == qk->name());
  CHECK(qk->json_spec() == "{\"kind\":\"qk\",\"k\":2,\"unit\":[\"1\",\"3/2\"]}");
}

TEST_CASE("malformed carrier descriptions are rejected with a reason") {
  expect_bad("{", "malformed JSON");
  expect_bad("[1,2]", "carrier description needs a string 'kind'");
  expect_bad("{\"kind\":3}", "carrier description needs a string 'kind'");
  expect_bad("{\"kind\":\"nope\"}", "unknown MV kind 'nope'");
  expect_bad("{\"kind\":\"nope\"}", "unknown group kind 'nope'", false);
  expect_bad("{\"kind\":\"chain\"}", "missing integer field 'n'");
  expect_bad("{\"kind\":\"product\"}", "product needs a 'factors' array");
  expect_bad("{\"kind\":\"zk\",\"k\":2}", "zk needs a 'unit' array", false);
  expect_bad("{\"kind\":\"zk\",\"k\":2,\"unit\":[1,\"x\"]}", "'unit' entries must be integers",
             false);
  expect_bad("{\"kind\":\"zk\",\"k\":3,\"unit\":[1,1]}", "'unit' length does not match 'k'",
             false);
  expect_bad("{\"kind\":\"lex2\",\"unit\":[1]}", "lex2 needs a two-entry 'unit' array", false);
  expect_bad("{\"kind\":\"qk\",\"k\":1}", "qk needs a 'unit' array", false);
  expect_bad("{\"kind\":\"qk\",\"k\":1,\"unit\":[1.5]}",
             "rationals are written as integers or \"p/q\" strings", false);
  expect_bad("{\"kind\":\"qk\",\"k\":1,\"unit\":[\"3:2\"]}", "malformed rational literal",
             false);

  expect_bad("{\"kind\":\"finite\",\"size\":2}", "finite table needs an 'oplus' matrix");
  expect_bad("{\"kind\":\"finite\",\"size\":2,\"oplus\":[[0,0],[0,0]]}",
             "finite table needs a 'neg' array");
  expect_bad("{\"kind\":\"finite\",\"size\":2,\"oplus\":[0,1],\"neg\":[0,0]}",
             "'oplus' rows must be arrays");
  expect_bad("{\"kind\":\"finite\",\"size\":2,\"oplus\":[[0,\"x\"],[0,0]],\"neg\":[0,0]}",
             "'oplus' entries must be integers");
  expect_bad("{\"kind\":\"finite\",\"size\":2,\"oplus\":[[0,0],[0,0]],\"neg\":[0,\"x\"]}",
             "'neg' entries must be integers");
  expect_bad("{\"kind\":\"finite\",\"size\":3,\"oplus\":[[0,0],[0,0]],\"neg\":[0,0],\"zero\":0}",
             "table sizes do not match 'size'");
  expect_bad(
      "{\"kind\":\"finite\",\"size\":2,\"oplus\":[[0,1],[1,1]],\"neg\":[1,0],\"zero\":0,"
      "\"label\":7}",
      "'label' must be a string");
}

TEST_CASE("table homs and sheaf files") {
  const std::string sheaf_text = R"json({
    "points": ["c", "o"],
    "leq": [[1, 1], [0, 1]],
    "stalks": {"c": {"kind": "chain", "n": 2}, "o": {"kind": "chain", "n": 4}},
    "restrictions": {"(c,o)": {"kind": "inclusion"}}
  })json";
  const SheafFile f = sheaf_from_json(sheaf_text);
  REQUIRE(f.is_mv);
  CHECK(f.mv.space->size() == 2);
  CHECK(validate_sheaf(f.mv).pass());
  CHECK(sections(f.mv, f.mv.space->whole())->elements().size() == 3);
  CHECK(f.mv.restriction(0, 1).label == "inclusion");

  // an explicit element-table restriction: L2 -> L4 doubling the index
  const std::string tabled = R"json({
    "points": ["c", "o"],
    "leq": [[1, 1], [0, 1]],
    "stalks": {"c": {"kind": "chain", "n": 2}, "o": {"kind": "chain", "n": 4}},
    "restrictions": {"(c,o)": {"kind": "table", "map": [0, 2, 4]}}
  })json";
  const SheafFile g = sheaf_from_json(tabled);
  const MvHom h = g.mv.restriction(0, 1);
  CHECK(h.label == "table");
  CHECK(h(Value(Rat(1, 2))) == Value(Rat(1, 2)));  // index 1 in L2 -> index 2 in L4
  CHECK(h(Value(Rat(1))) == Value(Rat(1)));
  CHECK(check_mv_hom(h).pass());
  CHECK(validate_sheaf(g.mv).pass());

  const std::string group_text = R"json({
    "points": ["c", "o"],
    "leq": [[1, 1], [0, 1]],
    "stalks": {"c": {"kind": "zu", "n": 1}, "o": {"kind": "zu", "n": 2}},
    "restrictions": {"(c,o)": {"kind": "scale", "factor": 2}}
  })json";
  const SheafFile lg = sheaf_from_json(group_text);
  REQUIRE(!lg.is_mv);
  CHECK(validate_sheaf(lg.lu).pass());
  CHECK(lg.lu.restriction(0, 1)(Value(3)) == Value(6));
}

TEST_CASE("sheaf file errors") {
  expect_bad_sheaf("[]", "sheaf description must be an object");
  expect_bad_sheaf("{\"leq\":[]}", "sheaf needs a 'points' array");
  expect_bad_sheaf("{\"points\":[1]}", "'points' entries must be strings");
  expect_bad_sheaf("{\"points\":[\"p\"]}", "sheaf needs a 'leq' matrix");
  expect_bad_sheaf("{\"points\":[\"p\"],\"leq\":[1]}", "'leq' rows must be arrays");
  expect_bad_sheaf("{\"points\":[\"p\"],\"leq\":[[\"x\"]]}",
                   "'leq' entries must be 0/1 or booleans");
  expect_bad_sheaf("{\"points\":[\"p\"],\"leq\":[[1]]}", "sheaf needs a 'stalks' object");
  expect_bad_sheaf("{\"points\":[\"p\"],\"leq\":[[1]],\"stalks\":{}}", "no stalk for point 'p'");
  expect_bad_sheaf(
      "{\"points\":[\"p\"],\"leq\":[[1]],\"stalks\":{\"p\":{\"kind\":\"chain\",\"n\":2},"
      "\"q\":{\"kind\":\"chain\",\"n\":2}}}",
      "'stalks' mentions points that do not exist");
  expect_bad_sheaf("{\"points\":[\"p\"],\"leq\":[[1]],\"stalks\":{\"p\":{\"kind\":\"w\"}}}",
                   "unknown stalk kind 'w'");
  expect_bad_sheaf(
      "{\"points\":[\"a\",\"b\"],\"leq\":[[1,0],[0,1]],\"stalks\":{\"a\":{\"kind\":\"chain\","
      "\"n\":2},\"b\":{\"kind\":\"zu\",\"n\":1}}}",
      "stalks mix the two signatures");
  expect_bad_sheaf(
      "{\"points\":[\"p\"],\"leq\":[[1]],\"stalks\":{\"p\":{\"kind\":\"chain\",\"n\":2}},"
      "\"restrictions\":[]}",
      "'restrictions' must be an object");
  expect_bad_sheaf(
      "{\"points\":[\"a\",\"b\"],\"leq\":[[1,1],[0,1]],\"stalks\":{\"a\":{\"kind\":\"chain\","
      "\"n\":2},\"b\":{\"kind\":\"chain\",\"n\":2}},\"restrictions\":{\"a->b\":{\"kind\":"
      "\"identity\"}}}",
      "restriction keys look like \"(x,y)\"");

  const std::string base =
      "{\"points\":[\"a\",\"b\"],\"leq\":[[1,1],[0,1]],\"stalks\":{\"a\":{\"kind\":\"chain\","
      "\"n\":2},\"b\":{\"kind\":\"chain\",\"n\":4}},\"restrictions\":{\"(a,b)\":";
  expect_bad_sheaf(base + "{\"kind\":\"table\"}}}", "'table' restrictions need a 'map' array");
  expect_bad_sheaf(base + "{\"kind\":\"table\",\"map\":[0,\"x\",4]}}}",
                   "'map' entries must be integers");
  expect_bad_sheaf(base + "{\"kind\":\"table\",\"map\":[0,9,4]}}}", "'map' entry out of range");
  expect_bad_sheaf(base + "{\"kind\":\"table\",\"map\":[0,2]}}}",
                   "'map' length does not match the source carrier");
  expect_bad_sheaf(base + "{\"kind\":\"strange\"}}}", "unknown MV restriction kind 'strange'");
  const std::string gbase =
      "{\"points\":[\"a\",\"b\"],\"leq\":[[1,1],[0,1]],\"stalks\":{\"a\":{\"kind\":\"zu\","
      "\"n\":1},\"b\":{\"kind\":\"zu\",\"n\":2}},\"restrictions\":{\"(a,b)\":";
  expect_bad_sheaf(gbase + "{\"kind\":\"strange\"}}}", "unknown group restriction kind 'strange'");
}

TEST_CASE("interval-restricted table maps need enumerable sources") {
  const std::string text =
      "{\"points\":[\"a\",\"b\"],\"leq\":[[1,1],[0,1]],\"stalks\":{\"a\":{\"kind\":"
      "\"interval\"},\"b\":{\"kind\":\"interval\"}},\"restrictions\":{\"(a,b)\":{\"kind\":"
      "\"table\",\"map\":[0]}}}";
  expect_bad_sheaf(text, "'table' restrictions need a finite source stalk");
}

TEST_CASE("serialization refuses carriers without a documented form") {
  CHECK_THROWS_AS(mv_algebra_to_json(nullptr), Error);
  try {
    mv_algebra_to_json(nullptr);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("no carrier") != std::string::npos);
  }
  CHECK_THROWS_AS(mv_algebra_to_json(gamma(make_scaled_int(2))), Error);
  CHECK_THROWS_AS(l_group_to_json(l_group(make_chain(2))), Error);
  CHECK(mv_algebra_to_json(make_chain(2)) == "{\"kind\":\"chain\",\"n\":2}");
  CHECK(l_group_to_json(make_scaled_int(2)) == "{\"kind\":\"zu\",\"n\":2}");
}

TEST_CASE("label escaping survives a round trip") {
  const MvPtr odd = make_finite_table({{0}}, {0}, 0, "say \"hi\" \\ bye");
  const MvPtr back = mv_algebra_from_json(odd->json_spec());
  CHECK(back->name() == "say \"hi\" \\ bye");
}

TEST_CASE("reading files") {
  const std::string path = "json_io_probe.json";
  {
    std::ofstream out(path);
    out << "{\"kind\":\"chain\",\"n\":5}";
  }
  CHECK(mv_algebra_from_json(read_file(path))->name() == "L5");
  std::remove(path.c_str());
  try {
    read_file("definitely_not_here_417.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("cannot read 'definitely_not_here_417.json'") !=
          std::string::npos);
  }
}
