#include "mundici/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mundici/errors.hpp"

namespace mundici {

namespace {

using nlohmann::json;

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::BadInput, "malformed JSON");
  return j;
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(Errc::BadInput, "carrier description needs a string 'kind'");
  return j.at("kind").get<std::string>();
}

long long int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    fail(Errc::BadInput, std::string("missing integer field '") + key + "'");
  return j.at(key).get<long long>();
}

bool is_mv_kind(const std::string& k) {
  return k == "finite" || k == "chain" || k == "interval" || k == "product" || k == "chang";
}

bool is_lu_kind(const std::string& k) {
  return k == "zu" || k == "zk" || k == "lex2" || k == "qk";
}

MvPtr mv_from(const json& j);

MvPtr mv_from(const json& j) {
  const std::string kind = kind_of(j);
  if (kind == "chain") return make_chain(int_field(j, "n"));
  if (kind == "interval") return make_rational_interval();
  if (kind == "chang") return make_chang();
  if (kind == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      fail(Errc::BadInput, "product needs a 'factors' array");
    std::vector<MvPtr> factors;
    for (const auto& f : j.at("factors")) factors.push_back(mv_from(f));
    return make_product(std::move(factors));
  }
  if (kind == "finite") {
    const long long size = int_field(j, "size");
    if (!j.contains("oplus") || !j.at("oplus").is_array())
      fail(Errc::BadInput, "finite table needs an 'oplus' matrix");
    if (!j.contains("neg") || !j.at("neg").is_array())
      fail(Errc::BadInput, "finite table needs a 'neg' array");
    std::vector<std::vector<int>> oplus;
    for (const auto& row : j.at("oplus")) {
      if (!row.is_array()) fail(Errc::BadInput, "'oplus' rows must be arrays");
      std::vector<int> r;
      for (const auto& c : row) {
        if (!c.is_number_integer()) fail(Errc::BadInput, "'oplus' entries must be integers");
        r.push_back(c.get<int>());
      }
      oplus.push_back(std::move(r));
    }
    std::vector<int> neg;
    for (const auto& c : j.at("neg")) {
      if (!c.is_number_integer()) fail(Errc::BadInput, "'neg' entries must be integers");
      neg.push_back(c.get<int>());
    }
    if (static_cast<long long>(oplus.size()) != size ||
        static_cast<long long>(neg.size()) != size)
      fail(Errc::BadInput, "table sizes do not match 'size'");
    std::string label;
    if (j.contains("label")) {
      if (!j.at("label").is_string()) fail(Errc::BadInput, "'label' must be a string");
      label = j.at("label").get<std::string>();
    }
    return make_finite_table(std::move(oplus), std::move(neg),
                             static_cast<int>(int_field(j, "zero")), std::move(label));
  }
  fail(Errc::BadInput, "unknown MV kind '" + kind + "'");
}

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat{j.get<long long>(), 1};
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail(Errc::BadInput, "rationals are written as integers or \"p/q\" strings");
}

LPtr lu_from(const json& j) {
  const std::string kind = kind_of(j);
  if (kind == "zu") return make_scaled_int(int_field(j, "n"));
  if (kind == "zk") {
    const long long k = int_field(j, "k");
    if (!j.contains("unit") || !j.at("unit").is_array())
      fail(Errc::BadInput, "zk needs a 'unit' array");
    std::vector<long long> unit;
    for (const auto& c : j.at("unit")) {
      if (!c.is_number_integer()) fail(Errc::BadInput, "'unit' entries must be integers");
      unit.push_back(c.get<long long>());
    }
    if (static_cast<long long>(unit.size()) != k)
      fail(Errc::BadInput, "'unit' length does not match 'k'");
    return make_free_pointwise(std::move(unit));
  }
  if (kind == "lex2") {
    if (!j.contains("unit") || !j.at("unit").is_array() || j.at("unit").size() != 2)
      fail(Errc::BadInput, "lex2 needs a two-entry 'unit' array");
    const auto& u = j.at("unit");
    if (!u[0].is_number_integer() || !u[1].is_number_integer())
      fail(Errc::BadInput, "'unit' entries must be integers");
    return make_lex_z2(u[0].get<long long>(), u[1].get<long long>());
  }
  if (kind == "qk") {
    const long long k = int_field(j, "k");
    if (!j.contains("unit") || !j.at("unit").is_array())
      fail(Errc::BadInput, "qk needs a 'unit' array");
    std::vector<Rat> unit;
    for (const auto& c : j.at("unit")) unit.push_back(rat_from(c));
    if (static_cast<long long>(unit.size()) != k)
      fail(Errc::BadInput, "'unit' length does not match 'k'");
    return make_rational_vec(std::move(unit));
  }
  fail(Errc::BadInput, "unknown group kind '" + kind + "'");
}

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  if (key.size() < 3 || key.front() != '(' || key.back() != ')')
    fail(Errc::BadInput, "restriction keys look like \"(x,y)\"");
  const std::string inner = key.substr(1, key.size() - 2);
  const size_t comma = inner.find(',');
  if (comma == std::string::npos) fail(Errc::BadInput, "restriction keys look like \"(x,y)\"");
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

std::function<Value(const Value&)> table_map(const MvPtr& src, const MvPtr& dst, const json& spec) {
  if (!src->finite()) fail(Errc::BadInput, "'table' restrictions need a finite source stalk");
  if (!spec.contains("map") || !spec.at("map").is_array())
    fail(Errc::BadInput, "'table' restrictions need a 'map' array");
  const auto src_elems = src->elements();
  const auto dst_elems = dst->elements();
  std::vector<long long> idx;
  for (const auto& c : spec.at("map")) {
    if (!c.is_number_integer()) fail(Errc::BadInput, "'map' entries must be integers");
    const long long v = c.get<long long>();
    if (v < 0 || v >= static_cast<long long>(dst_elems.size()))
      fail(Errc::BadInput, "'map' entry out of range");
    idx.push_back(v);
  }
  if (idx.size() != src_elems.size())
    fail(Errc::BadInput, "'map' length does not match the source carrier");
  return [src, src_elems, dst_elems, idx](const Value& x) {
    for (size_t i = 0; i < src_elems.size(); ++i)
      if (src->eq(x, src_elems[i])) return dst_elems[idx[i]];
    fail(Errc::ElementNotInCarrier, "table restriction applied outside its source");
  };
}

MvHom mv_hom_from(const MvPtr& src, const MvPtr& dst, const json& spec) {
  const std::string kind = kind_of(spec);
  MvHom h;
  h.source = src;
  h.target = dst;
  h.label = kind;
  if (kind == "identity" || kind == "inclusion") {
    h.map = [](const Value& x) { return x; };
    return h;
  }
  if (kind == "table") {
    h.map = table_map(src, dst, spec);
    return h;
  }
  fail(Errc::BadInput, "unknown MV restriction kind '" + kind + "'");
}

LHom lu_hom_from(const LPtr& src, const LPtr& dst, const json& spec) {
  const std::string kind = kind_of(spec);
  LHom h;
  h.source = src;
  h.target = dst;
  h.label = kind;
  if (kind == "identity" || kind == "inclusion") {
    h.map = [](const Value& x) { return x; };
    return h;
  }
  if (kind == "scale") {
    const long long m = int_field(spec, "factor");
    h.map = [dst, m](const Value& x) { return dst->scale(m, x); };
    return h;
  }
  fail(Errc::BadInput, "unknown group restriction kind '" + kind + "'");
}

}  // namespace

MvPtr mv_algebra_from_json(const std::string& text) {
  try {
    return mv_from(parse_checked(text));
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("bad carrier description: ") + e.what());
  }
}

LPtr l_group_from_json(const std::string& text) {
  try {
    return lu_from(parse_checked(text));
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("bad carrier description: ") + e.what());
  }
}

SheafFile sheaf_from_json(const std::string& text) {
  try {
    const json j = parse_checked(text);
    if (!j.is_object()) fail(Errc::BadInput, "sheaf description must be an object");
    if (!j.contains("points") || !j.at("points").is_array())
      fail(Errc::BadInput, "sheaf needs a 'points' array");
    std::vector<std::string> points;
    for (const auto& p : j.at("points")) {
      if (!p.is_string()) fail(Errc::BadInput, "'points' entries must be strings");
      points.push_back(p.get<std::string>());
    }
    if (!j.contains("leq") || !j.at("leq").is_array())
      fail(Errc::BadInput, "sheaf needs a 'leq' matrix");
    std::vector<std::vector<bool>> leq;
    for (const auto& row : j.at("leq")) {
      if (!row.is_array()) fail(Errc::BadInput, "'leq' rows must be arrays");
      std::vector<bool> r;
      for (const auto& c : row) {
        if (c.is_boolean())
          r.push_back(c.get<bool>());
        else if (c.is_number_integer())
          r.push_back(c.get<long long>() != 0);
        else
          fail(Errc::BadInput, "'leq' entries must be 0/1 or booleans");
      }
      leq.push_back(std::move(r));
    }
    const SpacePtr space = std::make_shared<FiniteSpace>(points, std::move(leq));

    if (!j.contains("stalks") || !j.at("stalks").is_object())
      fail(Errc::BadInput, "sheaf needs a 'stalks' object");
    const auto& stalks_j = j.at("stalks");
    for (const auto& p : points)
      if (!stalks_j.contains(p)) fail(Errc::BadInput, "no stalk for point '" + p + "'");
    if (stalks_j.size() != points.size())
      fail(Errc::BadInput, "'stalks' mentions points that do not exist");

    const std::string first_kind = kind_of(stalks_j.at(points[0]));
    SheafFile out;
    out.is_mv = is_mv_kind(first_kind);
    if (!out.is_mv && !is_lu_kind(first_kind))
      fail(Errc::BadInput, "unknown stalk kind '" + first_kind + "'");

    std::vector<MvPtr> mv_stalks;
    std::vector<LPtr> lu_stalks;
    for (const auto& p : points) {
      const std::string k = kind_of(stalks_j.at(p));
      if (out.is_mv != is_mv_kind(k))
        fail(Errc::BadInput, "stalks mix the two signatures");
      if (out.is_mv)
        mv_stalks.push_back(mv_from(stalks_j.at(p)));
      else
        lu_stalks.push_back(lu_from(stalks_j.at(p)));
    }

    std::map<std::pair<int, int>, MvHom> mv_rest;
    std::map<std::pair<int, int>, LHom> lu_rest;
    if (j.contains("restrictions")) {
      if (!j.at("restrictions").is_object())
        fail(Errc::BadInput, "'restrictions' must be an object");
      for (const auto& [key, spec] : j.at("restrictions").items()) {
        const auto [from, to] = split_pair_key(key);
        const int x = space->point_index(from);
        const int y = space->point_index(to);
        if (out.is_mv)
          mv_rest.emplace(std::make_pair(x, y), mv_hom_from(mv_stalks[x], mv_stalks[y], spec));
        else
          lu_rest.emplace(std::make_pair(x, y), lu_hom_from(lu_stalks[x], lu_stalks[y], spec));
      }
    }

    if (out.is_mv)
      out.mv = make_mv_sheaf(space, std::move(mv_stalks), std::move(mv_rest));
    else
      out.lu = make_l_sheaf(space, std::move(lu_stalks), std::move(lu_rest));
    return out;
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("bad sheaf description: ") + e.what());
  }
}

std::string mv_algebra_to_json(const MvPtr& a) {
  if (!a) fail(Errc::BadInput, "no carrier");
  return a->json_spec();
}

std::string l_group_to_json(const LPtr& g) {
  if (!g) fail(Errc::BadInput, "no carrier");
  return g->json_spec();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::BadInput, "cannot read '" + path + "'");
  return buf.str();
}

}  // namespace mundici
