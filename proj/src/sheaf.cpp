#include "mundici/sheaf.hpp"

#include <algorithm>
#include <set>

#include "mundici/errors.hpp"

namespace mundici {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<std::vector<bool>> leq)
    : points_(std::move(points)), leq_(std::move(leq)) {
  const size_t n = points_.size();
  if (leq_.size() != n) fail(Errc::BadInput, "preorder matrix size does not match point count");
  for (const auto& row : leq_)
    if (row.size() != n) fail(Errc::BadInput, "preorder matrix is not square");
  for (size_t i = 0; i < n; ++i)
    if (!leq_[i][i]) fail(Errc::BadInput, "preorder is not reflexive at " + points_[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k])
          fail(Errc::BadInput, "preorder is not transitive through " + points_[j]);
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != n) fail(Errc::BadInput, "duplicate point names");
}

int FiniteSpace::point_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == name) return i;
  fail(Errc::BadInput, "no point named '" + name + "'");
}

bool FiniteSpace::is_open(const std::vector<int>& pts) const {
  std::set<int> s;
  for (int p : pts) {
    if (p < 0 || p >= size()) fail(Errc::BadInput, "point index out of range");
    s.insert(p);
  }
  for (int p : s)
    for (int y = 0; y < size(); ++y)
      if (leq(p, y) && !s.count(y)) return false;
  return true;
}

std::vector<int> FiniteSpace::min_open(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

std::vector<std::vector<int>> FiniteSpace::opens() const {
  if (size() > 16) fail(Errc::BadInput, "too many points to enumerate opens");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << size()); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < size(); ++i)
      if (mask & (1u << i)) pts.push_back(i);
    if (is_open(pts)) out.push_back(pts);
  }
  return out;
}

std::vector<int> FiniteSpace::whole() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[i] = i;
  return out;
}

SpacePtr FiniteSpace::point() {
  return std::make_shared<FiniteSpace>(std::vector<std::string>{"p"},
                                       std::vector<std::vector<bool>>{{true}});
}

SpacePtr FiniteSpace::sierpinski() {
  return std::make_shared<FiniteSpace>(std::vector<std::string>{"c", "o"},
                                       std::vector<std::vector<bool>>{{true, true}, {false, true}});
}

SpacePtr FiniteSpace::chain(int n) {
  if (n < 1) fail(Errc::BadInput, "chain needs at least one point");
  std::vector<std::string> pts;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    pts.push_back("p" + std::to_string(i));
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return std::make_shared<FiniteSpace>(std::move(pts), std::move(leq));
}

SpacePtr FiniteSpace::antichain(int n) {
  if (n < 1) fail(Errc::BadInput, "antichain needs at least one point");
  std::vector<std::string> pts;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    pts.push_back("a" + std::to_string(i));
    leq[i][i] = true;
  }
  return std::make_shared<FiniteSpace>(std::move(pts), std::move(leq));
}

ContinuousMap::ContinuousMap(SpacePtr d, SpacePtr c, std::vector<int> m, std::string lbl)
    : dom(std::move(d)), cod(std::move(c)), map(std::move(m)), label(std::move(lbl)) {
  if (!dom || !cod) fail(Errc::BadInput, "map needs both spaces");
  if (static_cast<int>(map.size()) != dom->size())
    fail(Errc::BadInput, "map length does not match the domain");
  for (int v : map)
    if (v < 0 || v >= cod->size()) fail(Errc::BadInput, "map value out of range");
  for (int x = 0; x < dom->size(); ++x)
    for (int y = 0; y < dom->size(); ++y)
      if (dom->leq(x, y) && !cod->leq(map[x], map[y]))
        fail(Errc::NotContinuous, "not monotone: " + dom->point_name(x) + " <= " +
                                      dom->point_name(y) + " but images are not ordered");
}

ContinuousMap ContinuousMap::identity(const SpacePtr& s) {
  std::vector<int> m(s->size());
  for (int i = 0; i < s->size(); ++i) m[i] = i;
  return ContinuousMap(s, s, std::move(m), "id");
}

ContinuousMap ContinuousMap::constant(const SpacePtr& d, const SpacePtr& c, int point) {
  if (point < 0 || point >= c->size()) fail(Errc::BadInput, "constant target out of range");
  return ContinuousMap(d, c, std::vector<int>(d->size(), point),
                       "const " + c->point_name(point));
}

const MvHom MvSheaf::restriction(int x, int y) const {
  if (x == y) return mv_identity(stalks[x]);
  auto it = restrictions.find({x, y});
  if (it == restrictions.end())
    fail(Errc::InvariantViolation, "missing restriction " + std::to_string(x) + " -> " +
                                       std::to_string(y));
  return it->second;
}

const LHom LSheaf::restriction(int x, int y) const {
  if (x == y) return l_identity(stalks[x]);
  auto it = restrictions.find({x, y});
  if (it == restrictions.end())
    fail(Errc::InvariantViolation, "missing restriction " + std::to_string(x) + " -> " +
                                       std::to_string(y));
  return it->second;
}

namespace {

template <typename Sheaf>
void validate_shape(const Sheaf& f) {
  if (!f.space) fail(Errc::BadInput, "sheaf has no space");
  if (static_cast<int>(f.stalks.size()) != f.space->size())
    fail(Errc::BadInput, "stalk count does not match the space");
  for (const auto& s : f.stalks)
    if (!s) fail(Errc::BadInput, "null stalk");
  for (int x = 0; x < f.space->size(); ++x)
    for (int y = 0; y < f.space->size(); ++y) {
      if (x == y) continue;
      const bool rel = f.space->leq(x, y);
      const bool present = f.restrictions.count({x, y}) > 0;
      if (rel && !present)
        fail(Errc::BadInput, "missing restriction for " + f.space->point_name(x) + " <= " +
                                 f.space->point_name(y));
      if (!rel && present)
        fail(Errc::BadInput, "restriction given for unrelated points " + f.space->point_name(x) +
                                 ", " + f.space->point_name(y));
      if (present) {
        const auto& h = f.restrictions.at({x, y});
        if (h.source != f.stalks[x] || h.target != f.stalks[y])
          fail(Errc::BadInput, "restriction endpoints do not match the stalks at " +
                                   f.space->point_name(x) + " -> " + f.space->point_name(y));
      }
    }
}

std::vector<int> sorted_open(const FiniteSpace& space, const std::vector<int>& open) {
  if (!space.is_open(open)) fail(Errc::NotOpen, "the point set is not up-closed");
  std::set<int> s(open.begin(), open.end());
  return std::vector<int>(s.begin(), s.end());
}

std::string open_label(const FiniteSpace& space, const std::vector<int>& open) {
  std::string out = "{";
  for (size_t i = 0; i < open.size(); ++i) out += (i ? "," : "") + space.point_name(open[i]);
  return out + "}";
}

// Shared layout of a compatible-family carrier: tuple slot i holds a value in
// the stalk at open[i]; slot pairs (i, j) with open[i] <= open[j] must agree
// through the restriction.
struct FamilyLayout {
  std::vector<int> open;
  std::vector<std::pair<int, int>> pairs;  // positions, not point indices

  static FamilyLayout of(const FiniteSpace& space, const std::vector<int>& open) {
    FamilyLayout lay;
    lay.open = sorted_open(space, open);
    const int n = static_cast<int>(lay.open.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && space.leq(lay.open[i], lay.open[j])) lay.pairs.push_back({i, j});
    return lay;
  }

  // For each position, a position it can be propagated from (itself if free),
  // in an order where sources come first.
  std::vector<std::pair<int, int>> propagation_order(const FiniteSpace& space) const {
    const int n = static_cast<int>(open.size());
    std::vector<int> rank(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && space.leq(open[j], open[i]) && !space.leq(open[i], open[j])) ++rank[i];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
    std::vector<std::pair<int, int>> out;
    std::vector<bool> assigned(n, false);
    for (int pos : order) {
      int src = pos;
      for (int j = 0; j < n; ++j)
        if (j != pos && assigned[j] && space.leq(open[j], open[pos])) {
          src = j;
          break;
        }
      out.push_back({pos, src});
      assigned[pos] = true;
    }
    return out;
  }
};

class SectionsAlgebra final : public MvAlgebra {
public:
  SectionsAlgebra(MvSheaf f, std::vector<int> open)
      : f_(std::move(f)), lay_(FamilyLayout::of(*f_.space, open)) {}

  std::string name() const override { return "sections" + open_label(*f_.space, lay_.open); }

  Value zero() const override {
    Value::Tuple t;
    for (int p : lay_.open) t.push_back(f_.stalks[p]->zero());
    return Value(t);
  }

  Value oplus(const Value& x, const Value& y) const override {
    const auto& a = comps(x);
    const auto& b = comps(y);
    Value::Tuple t;
    for (size_t i = 0; i < lay_.open.size(); ++i)
      t.push_back(f_.stalks[lay_.open[i]]->oplus(a[i], b[i]));
    return Value(t);
  }

  Value neg(const Value& x) const override {
    const auto& a = comps(x);
    Value::Tuple t;
    for (size_t i = 0; i < lay_.open.size(); ++i) t.push_back(f_.stalks[lay_.open[i]]->neg(a[i]));
    return Value(t);
  }

  bool contains(const Value& x) const override {
    if (!x.is_tuple()) return false;
    const auto& a = x.as_tuple();
    if (a.size() != lay_.open.size()) return false;
    for (size_t i = 0; i < lay_.open.size(); ++i)
      if (!f_.stalks[lay_.open[i]]->contains(a[i])) return false;
    for (const auto& [i, j] : lay_.pairs) {
      const auto r = f_.restriction(lay_.open[i], lay_.open[j]);
      if (!f_.stalks[lay_.open[j]]->eq(r(a[i]), a[j])) return false;
    }
    return true;
  }

  bool eq(const Value& x, const Value& y) const override {
    const auto& a = comps(x);
    const auto& b = comps(y);
    for (size_t i = 0; i < lay_.open.size(); ++i)
      if (!f_.stalks[lay_.open[i]]->eq(a[i], b[i])) return false;
    return true;
  }

  bool finite() const override {
    for (int p : lay_.open)
      if (!f_.stalks[p]->finite()) return false;
    return true;
  }

  std::vector<Value> elements() const override {
    std::vector<std::vector<Value>> stalk_elems;
    for (int p : lay_.open) stalk_elems.push_back(f_.stalks[p]->elements());
    std::vector<Value> out;
    std::vector<size_t> idx(lay_.open.size(), 0);
    while (true) {
      Value::Tuple t;
      for (size_t i = 0; i < idx.size(); ++i) t.push_back(stalk_elems[i][idx[i]]);
      Value v{t};
      if (contains(v)) out.push_back(v);
      size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < stalk_elems[i].size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
    if (lay_.open.empty()) out = {Value(Value::Tuple{})};
    return out;
  }

  Value sample(Rng& rng) const override {
    for (int attempt = 0; attempt < 32; ++attempt) {
      Value v = propagate(rng);
      if (contains(v)) return v;
    }
    return zero();
  }

  std::vector<Value> probes() const override { return {zero(), one()}; }

  std::string format(const Value& x) const override {
    const auto& a = comps(x);
    std::string out = "{";
    for (size_t i = 0; i < lay_.open.size(); ++i) {
      if (i) out += ", ";
      out += f_.space->point_name(lay_.open[i]) + "=" + f_.stalks[lay_.open[i]]->format(a[i]);
    }
    return out + "}";
  }

private:
  const Value::Tuple& comps(const Value& x) const {
    if (!x.is_tuple() || x.as_tuple().size() != lay_.open.size())
      fail(Errc::ElementNotInCarrier, "not a section tuple");
    return x.as_tuple();
  }

  Value propagate(Rng& rng) const {
    Value::Tuple t(lay_.open.size(), Value(0));
    for (const auto& [pos, src] : lay_.propagation_order(*f_.space)) {
      if (src == pos) {
        t[pos] = f_.stalks[lay_.open[pos]]->sample(rng);
      } else {
        const auto r = f_.restriction(lay_.open[src], lay_.open[pos]);
        t[pos] = r(t[src]);
      }
    }
    return Value(t);
  }

  MvSheaf f_;
  FamilyLayout lay_;
};

class SectionsGroup final : public LGroupU {
public:
  SectionsGroup(LSheaf f, std::vector<int> open)
      : f_(std::move(f)), lay_(FamilyLayout::of(*f_.space, open)) {}

  std::string name() const override { return "sections" + open_label(*f_.space, lay_.open); }

  Value zero() const override { return fold([](const LGroupU& g) { return g.zero(); }); }
  Value unit() const override { return fold([](const LGroupU& g) { return g.unit(); }); }

  Value add(const Value& x, const Value& y) const override {
    return zip(x, y, [](const LGroupU& g, const Value& a, const Value& b) { return g.add(a, b); });
  }
  Value neg(const Value& x) const override {
    const auto& a = comps(x);
    Value::Tuple t;
    for (size_t i = 0; i < lay_.open.size(); ++i) t.push_back(stalk(i).neg(a[i]));
    return Value(t);
  }
  bool leq(const Value& x, const Value& y) const override {
    const auto& a = comps(x);
    const auto& b = comps(y);
    for (size_t i = 0; i < lay_.open.size(); ++i)
      if (!stalk(i).leq(a[i], b[i])) return false;
    return true;
  }
  Value inf(const Value& x, const Value& y) const override {
    return zip(x, y, [](const LGroupU& g, const Value& a, const Value& b) { return g.inf(a, b); });
  }
  Value sup(const Value& x, const Value& y) const override {
    return zip(x, y, [](const LGroupU& g, const Value& a, const Value& b) { return g.sup(a, b); });
  }

  // A family of stalk-level witnesses does not certify the section level;
  // no bound is claimed.
  std::optional<long long> unit_bound(const Value&) const override { return std::nullopt; }

  bool contains(const Value& x) const override {
    if (!x.is_tuple()) return false;
    const auto& a = x.as_tuple();
    if (a.size() != lay_.open.size()) return false;
    for (size_t i = 0; i < lay_.open.size(); ++i)
      if (!stalk(i).contains(a[i])) return false;
    for (const auto& [i, j] : lay_.pairs) {
      const auto r = f_.restriction(lay_.open[i], lay_.open[j]);
      if (!stalk(j).eq(r(a[i]), a[j])) return false;
    }
    return true;
  }

  bool eq(const Value& x, const Value& y) const override {
    const auto& a = comps(x);
    const auto& b = comps(y);
    for (size_t i = 0; i < lay_.open.size(); ++i)
      if (!stalk(i).eq(a[i], b[i])) return false;
    return true;
  }

  Value sample(Rng& rng) const override {
    for (int attempt = 0; attempt < 32; ++attempt) {
      Value v = propagate(rng);
      if (contains(v)) return v;
    }
    return zero();
  }

  std::vector<Value> probes() const override { return {zero(), unit(), neg(unit())}; }

  bool interval_enumerable() const override {
    for (int p : lay_.open)
      if (!f_.stalks[p]->interval_enumerable()) return false;
    return true;
  }

  std::vector<Value> interval_elements(int max_len) const override {
    std::vector<std::vector<Value>> stalk_elems;
    for (int p : lay_.open) stalk_elems.push_back(f_.stalks[p]->interval_elements(max_len));
    std::vector<Value> out;
    if (lay_.open.empty()) return {Value(Value::Tuple{})};
    std::vector<size_t> idx(lay_.open.size(), 0);
    while (true) {
      Value::Tuple t;
      for (size_t i = 0; i < idx.size(); ++i) t.push_back(stalk_elems[i][idx[i]]);
      Value v{t};
      if (contains(v)) out.push_back(v);
      size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < stalk_elems[i].size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
    return out;
  }

  std::string format(const Value& x) const override {
    const auto& a = comps(x);
    std::string out = "{";
    for (size_t i = 0; i < lay_.open.size(); ++i) {
      if (i) out += ", ";
      out += f_.space->point_name(lay_.open[i]) + "=" + stalk(i).format(a[i]);
    }
    return out + "}";
  }

private:
  const LGroupU& stalk(size_t pos) const { return *f_.stalks[lay_.open[pos]]; }

  const Value::Tuple& comps(const Value& x) const {
    if (!x.is_tuple() || x.as_tuple().size() != lay_.open.size())
      fail(Errc::ElementNotInCarrier, "not a section tuple");
    return x.as_tuple();
  }

  template <typename F>
  Value fold(F op) const {
    Value::Tuple t;
    for (size_t i = 0; i < lay_.open.size(); ++i) t.push_back(op(stalk(i)));
    return Value(t);
  }

  template <typename F>
  Value zip(const Value& x, const Value& y, F op) const {
    const auto& a = comps(x);
    const auto& b = comps(y);
    Value::Tuple t;
    for (size_t i = 0; i < lay_.open.size(); ++i) t.push_back(op(stalk(i), a[i], b[i]));
    return Value(t);
  }

  Value propagate(Rng& rng) const {
    Value::Tuple t(lay_.open.size(), Value(0));
    for (const auto& [pos, src] : lay_.propagation_order(*f_.space)) {
      if (src == pos) {
        t[pos] = f_.stalks[lay_.open[pos]]->sample(rng);
      } else {
        const auto r = f_.restriction(lay_.open[src], lay_.open[pos]);
        t[pos] = r(t[src]);
      }
    }
    return Value(t);
  }

  LSheaf f_;
  FamilyLayout lay_;
};

}  // namespace

MvSheaf make_mv_sheaf(SpacePtr space, std::vector<MvPtr> stalks,
                      std::map<std::pair<int, int>, MvHom> restrictions) {
  MvSheaf f{std::move(space), std::move(stalks), std::move(restrictions)};
  validate_shape(f);
  return f;
}

LSheaf make_l_sheaf(SpacePtr space, std::vector<LPtr> stalks,
                    std::map<std::pair<int, int>, LHom> restrictions) {
  LSheaf f{std::move(space), std::move(stalks), std::move(restrictions)};
  validate_shape(f);
  return f;
}

MvPtr sections(const MvSheaf& f, const std::vector<int>& open) {
  return std::make_shared<SectionsAlgebra>(f, open);
}

LPtr sections(const LSheaf& f, const std::vector<int>& open) {
  return std::make_shared<SectionsGroup>(f, open);
}

MvSheaf gamma_sheaf(const LSheaf& f, const CheckOptions& opt) {
  MvSheaf out;
  out.space = f.space;
  for (const auto& s : f.stalks) out.stalks.push_back(gamma(s));
  for (const auto& [key, hom] : f.restrictions) {
    MvHom gh = gamma_hom(hom, opt);
    // rebind endpoints to the shared stalk instances
    gh.source = out.stalks[key.first];
    gh.target = out.stalks[key.second];
    out.restrictions.emplace(key, std::move(gh));
  }
  return out;
}

LSheaf l_sheaf(const MvSheaf& f) {
  LSheaf out;
  out.space = f.space;
  for (const auto& s : f.stalks) out.stalks.push_back(l_group(s));
  for (const auto& [key, hom] : f.restrictions) {
    LHom lh = l_hom(hom);
    lh.source = out.stalks[key.first];
    lh.target = out.stalks[key.second];
    out.restrictions.emplace(key, std::move(lh));
  }
  return out;
}

MvSheaf inverse_image(const ContinuousMap& f, const MvSheaf& g) {
  if (f.cod != g.space) fail(Errc::BadInput, "map codomain is not the sheaf's space");
  MvSheaf out;
  out.space = f.dom;
  for (int x = 0; x < f.dom->size(); ++x) out.stalks.push_back(g.stalks[f.map[x]]);
  for (int x = 0; x < f.dom->size(); ++x)
    for (int y = 0; y < f.dom->size(); ++y)
      if (x != y && f.dom->leq(x, y)) out.restrictions.emplace(std::make_pair(x, y),
                                                               g.restriction(f.map[x], f.map[y]));
  return out;
}

LSheaf inverse_image(const ContinuousMap& f, const LSheaf& g) {
  if (f.cod != g.space) fail(Errc::BadInput, "map codomain is not the sheaf's space");
  LSheaf out;
  out.space = f.dom;
  for (int x = 0; x < f.dom->size(); ++x) out.stalks.push_back(g.stalks[f.map[x]]);
  for (int x = 0; x < f.dom->size(); ++x)
    for (int y = 0; y < f.dom->size(); ++y)
      if (x != y && f.dom->leq(x, y)) out.restrictions.emplace(std::make_pair(x, y),
                                                               g.restriction(f.map[x], f.map[y]));
  return out;
}

namespace {

// Functorial composition of restrictions plus the principal-up-set
// section/stalk comparison, shared by the two validators via callbacks.
template <typename Sheaf, typename GetEq, typename Pool>
void check_restriction_composition(Report& rep, const Sheaf& f, GetEq stalk_eq, Pool pool) {
  const int n = f.space->size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!(f.space->leq(x, y) && f.space->leq(y, z))) continue;
        if (x == y || y == z) continue;
        const auto rxy = f.restriction(x, y);
        const auto ryz = f.restriction(y, z);
        const auto rxz = f.restriction(x, z);
        for (const auto& e : pool(x)) {
          rep.checked += 1;
          if (!stalk_eq(z, ryz(rxy(e)), rxz(e))) {
            rep.fail_with("restrictions compose along " + f.space->point_name(x) + " <= " +
                              f.space->point_name(y) + " <= " + f.space->point_name(z),
                          "element " + f.stalks[x]->format(e));
            return;
          }
        }
      }
}

}  // namespace

Report validate_sheaf(const MvSheaf& f, const CheckOptions& opt) {
  Report rep;
  rep.check = "validate-sheaf";
  rep.subject = "mv sheaf on " + open_label(*f.space, f.space->whole());
  rep.seed = opt.seed;
  rep.mode = "sampled";
  try {
    validate_shape(f);
    for (int x = 0; x < f.space->size(); ++x) {
      Report ax = check_mv_axioms(f.stalks[x], opt);
      ax.subject = "stalk " + f.space->point_name(x) + " = " + f.stalks[x]->name();
      rep.absorb(ax);
      if (!rep.pass()) return rep;
    }
    for (const auto& [key, hom] : f.restrictions) {
      Report hr = check_mv_hom(hom, opt);
      hr.subject = "restriction " + f.space->point_name(key.first) + " -> " +
                   f.space->point_name(key.second);
      rep.absorb(hr);
      if (!rep.pass()) return rep;
    }
    Rng rng(opt.seed);
    auto pool = [&](int x) {
      bool ex = false;
      return element_pool(*f.stalks[x], std::min<long long>(opt.budget, 32), rng, &ex);
    };
    check_restriction_composition(rep, f,
                                  [&](int z, const Value& a, const Value& b) {
                                    return f.stalks[z]->eq(a, b);
                                  },
                                  pool);
    if (!rep.pass()) return rep;

    // sections over a principal up-set project isomorphically onto the stalk
    for (int x = 0; x < f.space->size(); ++x) {
      const auto up = f.space->min_open(x);
      const MvPtr sec = sections(f, up);
      const size_t pos = std::find(up.begin(), up.end(), x) - up.begin();
      auto build = [&](const Value& t) {
        Value::Tuple fam;
        for (int y : up) fam.push_back(f.restriction(x, y)(t));
        return Value(fam);
      };
      for (const auto& t : pool(x)) {
        rep.checked += 1;
        const Value s = build(t);
        if (!sec->contains(s)) {
          rep.fail_with("families propagated from " + f.space->point_name(x) + " are sections",
                        f.stalks[x]->format(t));
          return rep;
        }
        if (!f.stalks[x]->eq(s.as_tuple()[pos], t)) {
          rep.fail_with("projection undoes propagation at " + f.space->point_name(x),
                        f.stalks[x]->format(t));
          return rep;
        }
      }
      if (sec->finite()) {
        for (const auto& s : sec->elements()) {
          rep.checked += 1;
          if (!sec->eq(build(s.as_tuple()[pos]), s)) {
            rep.fail_with("propagation undoes projection at " + f.space->point_name(x),
                          sec->format(s));
            return rep;
          }
        }
      }
    }
  } catch (const Error& e) {
    rep.fail_with("sheaf structure", e.what());
  }
  return rep;
}

Report validate_sheaf(const LSheaf& f, const CheckOptions& opt) {
  Report rep;
  rep.check = "validate-sheaf";
  rep.subject = "l sheaf on " + open_label(*f.space, f.space->whole());
  rep.seed = opt.seed;
  rep.mode = "sampled";
  try {
    validate_shape(f);
    for (int x = 0; x < f.space->size(); ++x) {
      Report ax = check_lu_axioms(f.stalks[x], opt);
      ax.subject = "stalk " + f.space->point_name(x) + " = " + f.stalks[x]->name();
      rep.absorb(ax);
      if (rep.outcome == Outcome::Fail) return rep;
    }
    for (const auto& [key, hom] : f.restrictions) {
      Report hr = check_l_hom(hom, opt);
      hr.subject = "restriction " + f.space->point_name(key.first) + " -> " +
                   f.space->point_name(key.second);
      rep.absorb(hr);
      if (rep.outcome == Outcome::Fail) return rep;
    }
    Rng rng(opt.seed);
    auto pool = [&](int x) {
      bool ex = false;
      return element_pool(*f.stalks[x], std::min<long long>(opt.budget, 32), rng, &ex);
    };
    check_restriction_composition(rep, f,
                                  [&](int z, const Value& a, const Value& b) {
                                    return f.stalks[z]->eq(a, b);
                                  },
                                  pool);
    if (rep.outcome == Outcome::Fail) return rep;

    for (int x = 0; x < f.space->size(); ++x) {
      const auto up = f.space->min_open(x);
      const LPtr sec = sections(f, up);
      const size_t pos = std::find(up.begin(), up.end(), x) - up.begin();
      auto build = [&](const Value& t) {
        Value::Tuple fam;
        for (int y : up) fam.push_back(f.restriction(x, y)(t));
        return Value(fam);
      };
      for (const auto& t : pool(x)) {
        rep.checked += 1;
        const Value s = build(t);
        if (!sec->contains(s)) {
          rep.fail_with("families propagated from " + f.space->point_name(x) + " are sections",
                        f.stalks[x]->format(t));
          return rep;
        }
        if (!f.stalks[x]->eq(s.as_tuple()[pos], t)) {
          rep.fail_with("projection undoes propagation at " + f.space->point_name(x),
                        f.stalks[x]->format(t));
          return rep;
        }
        rep.checked += 1;
        if (!sec->eq(build(s.as_tuple()[pos]), s)) {
          rep.fail_with("propagation undoes projection at " + f.space->point_name(x),
                        sec->format(s));
          return rep;
        }
      }
    }
  } catch (const Error& e) {
    rep.fail_with("sheaf structure", e.what());
  }
  return rep;
}

Report check_sheaf_roundtrip(const MvSheaf& f, const CheckOptions& opt) {
  Report rep;
  rep.check = "sheaf-roundtrip";
  rep.subject = "mv sheaf on " + open_label(*f.space, f.space->whole());
  rep.seed = opt.seed;
  rep.mode = "sampled";
  try {
    for (int x = 0; x < f.space->size(); ++x) {
      Report stalk = phi(f.stalks[x], opt).report;
      stalk.subject = "stalk " + f.space->point_name(x) + " = " + f.stalks[x]->name();
      rep.absorb(stalk);
      if (rep.outcome == Outcome::Fail) return rep;
    }
    for (const auto& [key, hom] : f.restrictions) {
      Report sq = check_phi_naturality(hom, opt);
      sq.subject = "restriction " + f.space->point_name(key.first) + " -> " +
                   f.space->point_name(key.second);
      rep.absorb(sq);
      if (rep.outcome == Outcome::Fail) return rep;
    }
  } catch (const Error& e) {
    rep.fail_with("roundtrip evaluation", e.what());
  }
  return rep;
}

Report check_sheaf_roundtrip(const LSheaf& f, const CheckOptions& opt) {
  Report rep;
  rep.check = "sheaf-roundtrip";
  rep.subject = "l sheaf on " + open_label(*f.space, f.space->whole());
  rep.seed = opt.seed;
  rep.mode = "sampled";
  try {
    for (int x = 0; x < f.space->size(); ++x) {
      Report stalk = psi(f.stalks[x], opt).report;
      stalk.subject = "stalk " + f.space->point_name(x) + " = " + f.stalks[x]->name();
      rep.absorb(stalk);
      if (rep.outcome == Outcome::Fail) return rep;
    }
    for (const auto& [key, hom] : f.restrictions) {
      Report sq = check_psi_naturality(hom, opt);
      sq.subject = "restriction " + f.space->point_name(key.first) + " -> " +
                   f.space->point_name(key.second);
      rep.absorb(sq);
      if (rep.outcome == Outcome::Fail) return rep;
    }
  } catch (const Error& e) {
    rep.fail_with("roundtrip evaluation", e.what());
  }
  return rep;
}

Report check_sheaf_naturality(const ContinuousMap& f, const MvSheaf& g, const CheckOptions& opt) {
  Report rep;
  rep.check = "sheaf-naturality";
  rep.subject = "pullback along " + (f.label.empty() ? std::string("map") : f.label) +
                " of mv sheaf";
  rep.seed = opt.seed;
  rep.mode = "sampled";
  if (f.dom->size() == 1) rep.note = "one-point space: reduces to the classical composite";
  try {
    const LSheaf pulled_then = l_sheaf(inverse_image(f, g));
    const LSheaf then_pulled = inverse_image(f, l_sheaf(g));
    Rng rng(opt.seed);
    for (int x = 0; x < f.dom->size(); ++x) {
      if (l_group_base(pulled_then.stalks[x]) != l_group_base(then_pulled.stalks[x])) {
        rep.fail_with("stalks agree at " + f.dom->point_name(x), "different base algebras");
        return rep;
      }
      rep.checked += 1;
    }
    for (int x = 0; x < f.dom->size(); ++x)
      for (int y = 0; y < f.dom->size(); ++y) {
        if (x == y || !f.dom->leq(x, y)) continue;
        const auto r1 = pulled_then.restriction(x, y);
        const auto r2 = then_pulled.restriction(x, y);
        bool ex = false;
        for (const auto& e :
             element_pool(*pulled_then.stalks[x], std::min<long long>(opt.budget, 24), rng, &ex)) {
          rep.checked += 1;
          if (!pulled_then.stalks[y]->eq(r1(e), r2(e))) {
            rep.fail_with("restriction squares commute at " + f.dom->point_name(x) + " -> " +
                              f.dom->point_name(y),
                          pulled_then.stalks[x]->format(e));
            return rep;
          }
        }
      }
  } catch (const Error& e) {
    rep.fail_with("naturality evaluation", e.what());
  }
  return rep;
}

Report check_sheaf_naturality(const ContinuousMap& f, const LSheaf& g, const CheckOptions& opt) {
  Report rep;
  rep.check = "sheaf-naturality";
  rep.subject = "pullback along " + (f.label.empty() ? std::string("map") : f.label) +
                " of l sheaf";
  rep.seed = opt.seed;
  rep.mode = "sampled";
  if (f.dom->size() == 1) rep.note = "one-point space: reduces to the classical composite";
  try {
    const MvSheaf pulled_then = gamma_sheaf(inverse_image(f, g), opt);
    const MvSheaf then_pulled = inverse_image(f, gamma_sheaf(g, opt));
    Rng rng(opt.seed);
    for (int x = 0; x < f.dom->size(); ++x) {
      if (gamma_base(pulled_then.stalks[x]) != gamma_base(then_pulled.stalks[x])) {
        rep.fail_with("stalks agree at " + f.dom->point_name(x), "different base groups");
        return rep;
      }
      rep.checked += 1;
    }
    for (int x = 0; x < f.dom->size(); ++x)
      for (int y = 0; y < f.dom->size(); ++y) {
        if (x == y || !f.dom->leq(x, y)) continue;
        const auto r1 = pulled_then.restriction(x, y);
        const auto r2 = then_pulled.restriction(x, y);
        bool ex = false;
        for (const auto& e :
             element_pool(*pulled_then.stalks[x], std::min<long long>(opt.budget, 24), rng, &ex)) {
          rep.checked += 1;
          if (!pulled_then.stalks[y]->eq(r1(e), r2(e))) {
            rep.fail_with("restriction squares commute at " + f.dom->point_name(x) + " -> " +
                              f.dom->point_name(y),
                          pulled_then.stalks[x]->format(e));
            return rep;
          }
        }
      }
  } catch (const Error& e) {
    rep.fail_with("naturality evaluation", e.what());
  }
  return rep;
}

Report compare_section_interval(const LSheaf& f, const CheckOptions& opt) {
  Report rep;
  rep.check = "section-interval-comparison";
  rep.subject = "l sheaf on " + open_label(*f.space, f.space->whole());
  rep.seed = opt.seed;
  rep.mode = "sampled";
  long long opens = 0, agreed = 0, mismatched = 0;
  try {
    const MvSheaf gs = gamma_sheaf(f, opt);
    for (const auto& open : f.space->opens()) {
      opens += 1;
      const MvPtr a = sections(gs, open);       // interval families
      const LPtr sec = sections(f, open);       // family group
      const MvPtr b = gamma(sec);               // its unit interval
      std::vector<Value> from_a, from_b;
      Rng rng(opt.seed);
      if (a->finite()) {
        from_a = a->elements();
      } else {
        from_a = a->probes();
        for (int i = 0; i < 16; ++i) from_a.push_back(a->sample(rng));
      }
      if (sec->interval_enumerable()) {
        from_b = sec->interval_elements(opt.max_len);
      } else {
        from_b = b->probes();
        for (int i = 0; i < 16; ++i) from_b.push_back(b->sample(rng));
      }
      for (const auto& e : from_a) {
        rep.checked += 1;
        (b->contains(e) ? agreed : mismatched) += 1;
      }
      for (const auto& e : from_b) {
        rep.checked += 1;
        (a->contains(e) ? agreed : mismatched) += 1;
      }
    }
    rep.note = "opens=" + std::to_string(opens) + " elements agreed=" + std::to_string(agreed) +
               " mismatched=" + std::to_string(mismatched) + " (observational, not asserted)";
  } catch (const Error& e) {
    rep.note = std::string("comparison stopped: ") + e.what() + " (observational, not asserted)";
  }
  return rep;
}

}  // namespace mundici
