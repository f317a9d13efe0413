#include "mundici/functors.hpp"

#include <algorithm>

#include "mundici/errors.hpp"

namespace mundici {

namespace {

// Unit interval [0, u] of a group, with truncated addition. Equality and
// formatting delegate to the group, so quotient carriers stay coherent.
class GammaAlgebra final : public MvAlgebra {
public:
  explicit GammaAlgebra(LPtr g) : g_(std::move(g)) {}

  std::string name() const override { return "Gamma(" + g_->name() + ")"; }
  Value zero() const override { return g_->zero(); }
  Value oplus(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return g_->inf(g_->unit(), g_->add(x, y));
  }
  Value neg(const Value& x) const override {
    require_element(x);
    return g_->sub(g_->unit(), x);
  }
  // The derived operations collapse to plain group operations on [0, u].
  Value odot(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return g_->sup(g_->zero(), g_->sub(g_->add(x, y), g_->unit()));
  }
  bool leq(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return g_->leq(x, y);
  }
  Value sup(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return g_->sup(x, y);
  }
  Value inf(const Value& x, const Value& y) const override {
    require_element(x);
    require_element(y);
    return g_->inf(x, y);
  }
  bool contains(const Value& x) const override {
    return g_->contains(x) && g_->leq(g_->zero(), x) && g_->leq(x, g_->unit());
  }
  bool eq(const Value& x, const Value& y) const override { return g_->eq(x, y); }
  bool finite() const override { return g_->interval_enumerable(); }
  std::vector<Value> elements() const override { return g_->interval_elements(2); }
  Value sample(Rng& rng) const override { return clamp(g_->sample(rng)); }
  std::vector<Value> probes() const override {
    std::vector<Value> out{g_->zero(), g_->unit()};
    for (const auto& p : g_->probes()) out.push_back(clamp(p));
    return out;
  }
  std::string format(const Value& x) const override { return g_->format(x); }

  const LPtr& base() const { return g_; }

private:
  Value clamp(const Value& x) const { return g_->inf(g_->unit(), g_->sup(g_->zero(), x)); }
  LPtr g_;
};

// Group of differences of good sequences: carriers are pairs [p, q] encoded
// as a two-tuple of component tuples, identified by cross sums.
class DifferenceGroup final : public LGroupU {
public:
  explicit DifferenceGroup(MvPtr a) : a_(std::move(a)) {}

  std::string name() const override { return "L(" + a_->name() + ")"; }
  Value zero() const override { return enc(GoodSequence::zero(a_), GoodSequence::zero(a_)); }
  Value unit() const override { return enc(GoodSequence::unit(a_), GoodSequence::zero(a_)); }
  Value add(const Value& x, const Value& y) const override {
    return enc(good_sum(pos(x), pos(y)), good_sum(ng(x), ng(y)));
  }
  Value neg(const Value& x) const override { return enc(ng(x), pos(x)); }
  bool leq(const Value& x, const Value& y) const override {
    return good_leq(good_sum(pos(x), ng(y)), good_sum(pos(y), ng(x)));
  }
  bool eq(const Value& x, const Value& y) const override {
    return good_eq(good_sum(pos(x), ng(y)), good_sum(pos(y), ng(x)));
  }
  Value inf(const Value& x, const Value& y) const override {
    const GoodSequence p = pos(x), nx = ng(x), q = pos(y), ny = ng(y);
    return enc(good_inf(good_sum(p, ny), good_sum(q, nx)), good_sum(nx, ny));
  }
  Value sup(const Value& x, const Value& y) const override {
    const GoodSequence p = pos(x), nx = ng(x), q = pos(y), ny = ng(y);
    return enc(good_sup(good_sum(p, ny), good_sum(q, nx)), good_sum(nx, ny));
  }
  std::optional<long long> unit_bound(const Value& x) const override {
    return std::max(pos(x).length(), ng(x).length());
  }
  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.as_tuple().size() != 2) return false;
    try {
      // Full validation here; the operation paths trust carrier values.
      GoodSequence::decode(a_, x.as_tuple().at(0));
      GoodSequence::decode(a_, x.as_tuple().at(1));
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  Value sample(Rng& rng) const override {
    return enc(sample_good_sequence(a_, 3, rng), sample_good_sequence(a_, 3, rng));
  }
  std::vector<Value> probes() const override {
    std::vector<Value> out{zero(), unit(), neg(unit()),
                           enc(GoodSequence::ones(a_, 2), GoodSequence::zero(a_))};
    for (const auto& p : a_->probes())
      out.push_back(enc(GoodSequence::single(a_, p), GoodSequence::zero(a_)));
    return out;
  }
  bool interval_enumerable() const override { return a_->finite(); }
  std::vector<Value> interval_elements(int max_len) const override {
    const auto seqs = enumerate_good_sequences(a_, std::max(1, max_len));
    std::vector<Value> reps;
    for (const auto& p : seqs)
      for (const auto& q : seqs) {
        const Value v = enc(p, q);
        if (!leq(zero(), v) || !leq(v, unit())) continue;
        bool seen = false;
        for (const auto& r : reps)
          if (eq(r, v)) {
            seen = true;
            break;
          }
        if (!seen) reps.push_back(v);
      }
    return reps;
  }
  std::string format(const Value& x) const override {
    return "[" + pos(x).str() + " | " + ng(x).str() + "]";
  }

  const MvPtr& base() const { return a_; }

  GoodSequence pos(const Value& x) const { return GoodSequence::decode_trusted(a_, x.as_tuple().at(0)); }
  GoodSequence ng(const Value& x) const { return GoodSequence::decode_trusted(a_, x.as_tuple().at(1)); }
  static Value enc(const GoodSequence& p, const GoodSequence& q) {
    return Value::pair(p.encode(), q.encode());
  }

private:
  MvPtr a_;
};

}  // namespace

MvPtr gamma(const LPtr& g) {
  if (!g) fail(Errc::BadInput, "gamma of a null group");
  return std::make_shared<GammaAlgebra>(g);
}

LPtr l_group(const MvPtr& a) {
  if (!a) fail(Errc::BadInput, "l_group of a null algebra");
  return std::make_shared<DifferenceGroup>(a);
}

LPtr gamma_base(const MvPtr& interval_algebra) {
  auto* ga = dynamic_cast<const GammaAlgebra*>(interval_algebra.get());
  if (!ga) fail(Errc::SourceTargetMismatch, interval_algebra->name() + " is not an interval algebra");
  return ga->base();
}

MvPtr l_group_base(const LPtr& difference_group) {
  auto* dg = dynamic_cast<const DifferenceGroup*>(difference_group.get());
  if (!dg) fail(Errc::SourceTargetMismatch, difference_group->name() + " is not a difference group");
  return dg->base();
}

Value make_pair_value(const GoodSequence& p, const GoodSequence& q) {
  require_same_algebra(p, q);
  return DifferenceGroup::enc(p, q);
}

GoodSequence pair_pos(const MvPtr& a, const Value& pair) {
  return GoodSequence::decode(a, pair.as_tuple().at(0));
}

GoodSequence pair_neg(const MvPtr& a, const Value& pair) {
  return GoodSequence::decode(a, pair.as_tuple().at(1));
}

std::string format_pair(const MvPtr& a, const Value& pair) {
  return "[" + pair_pos(a, pair).str() + " | " + pair_neg(a, pair).str() + "]";
}

MvHom gamma_hom(const LHom& h, const CheckOptions& opt) {
  MvPtr src = gamma(h.source);
  MvPtr dst = gamma(h.target);
  // Interval preservation guard on spot and sampled interval elements.
  Rng rng(opt.seed);
  std::vector<Value> pool = src->probes();
  for (long long i = 0; i < std::min<long long>(opt.budget, 64); ++i) pool.push_back(src->sample(rng));
  for (const auto& x : pool) {
    const Value y = h(x);
    if (!dst->contains(y))
      fail(Errc::ImageEscapesInterval,
           h.source->name() + " -> " + h.target->name() + " maps " + src->format(x) +
               " to " + h.target->format(y) + " outside [0, u]");
  }
  auto hm = h.map;
  return MvHom{src, dst, hm, h.label.empty() ? "gamma(h)" : "gamma(" + h.label + ")"};
}

LHom l_hom(const MvHom& f) {
  MvPtr src_a = f.source;
  MvPtr dst_a = f.target;
  LPtr src = l_group(src_a);
  LPtr dst = l_group(dst_a);
  auto fm = f.map;
  auto apply_seq = [dst_a, fm](const MvPtr& a, const Value& comps) {
    std::vector<Value> out;
    for (const auto& c : comps.as_tuple()) out.push_back(fm(c));
    (void)a;
    return GoodSequence::normalize(dst_a, std::move(out)).encode();
  };
  auto map = [src_a, apply_seq](const Value& x) {
    const auto& t = x.as_tuple();
    return Value::pair(apply_seq(src_a, t.at(0)), apply_seq(src_a, t.at(1)));
  };
  return LHom{src, dst, map, f.label.empty() ? "l(f)" : "l(" + f.label + ")"};
}

GoodSequence good_decompose(const LPtr& g, const Value& b, MvPtr into) {
  g->require_element(b);
  if (!g->leq(g->zero(), b))
    fail(Errc::NegativeElement, g->format(b) + " is not >= 0 in " + g->name());
  MvPtr ga = into ? std::move(into) : gamma(g);
  const auto bound = g->unit_bound(b);
  const long long cap = bound ? *bound + 2 : 64;
  std::vector<Value> comps;
  Value r = b;
  long long i = 0;
  for (; i < cap && !g->eq(r, g->zero()); ++i) {
    const Value c = g->inf(g->unit(), r);
    comps.push_back(c);
    r = g->sub(r, c);
  }
  if (!g->eq(r, g->zero()))
    fail(Errc::InvariantViolation,
         "decomposition of " + g->format(b) + " did not reach 0 within the unit bound");
  return GoodSequence::normalize(std::move(ga), std::move(comps));
}

namespace {

Value phi_image(const MvPtr& a, const Value& x) {
  return DifferenceGroup::enc(GoodSequence::single(a, x), GoodSequence::zero(a));
}

Value sum_components(const LGroupU& g, const GoodSequence& s) {
  Value acc = g.zero();
  for (const auto& c : s.components()) acc = g.add(acc, c);
  return acc;
}

}  // namespace

IsoWitness phi(const MvPtr& a, const CheckOptions& opt) {
  LPtr L = l_group(a);
  MvPtr GA = gamma(L);

  IsoWitness iso;
  iso.description = "phi: " + a->name() + " -> " + GA->name();
  MvPtr a_keep = a;
  iso.forward = [a_keep](const Value& x) {
    a_keep->require_element(x);
    return phi_image(a_keep, x);
  };
  LPtr L_keep = L;
  MvPtr GA_keep = GA;
  CheckOptions opt_keep = opt;
  iso.backward = [a_keep, GA_keep, opt_keep](const Value& v) {
    GA_keep->require_element(v);
    Rng rng(opt_keep.seed);
    bool exhaustive = false;
    for (const auto& b : element_pool(*a_keep, opt_keep.budget, rng, &exhaustive))
      if (GA_keep->eq(v, phi_image(a_keep, b))) return b;
    fail(Errc::ElementNotInCarrier, "no preimage found for " + GA_keep->format(v));
  };

  Report& rep = iso.report;
  rep.check = "phi-roundtrip";
  rep.subject = a->name();
  rep.seed = opt.seed;
  Rng rng(opt.seed);
  bool exhaustive = false;
  const auto pool = element_pool(*a, opt.budget, rng, &exhaustive);
  rep.mode = exhaustive ? "exhaustive" : "sampled";

  try {
    rep.checked += 1;
    if (!GA->eq(iso.forward(a->zero()), GA->zero())) {
      rep.fail_with("phi preserves 0", "phi(0)=" + GA->format(iso.forward(a->zero())));
      return iso;
    }
    for (const auto& x : pool) {
      rep.checked += 2;
      if (!GA->contains(iso.forward(x))) {
        rep.fail_with("phi lands in the interval", "x=" + a->format(x));
        return iso;
      }
      if (!GA->eq(iso.forward(a->neg(x)), GA->neg(iso.forward(x)))) {
        rep.fail_with("phi preserves neg", "x=" + a->format(x));
        return iso;
      }
      if (!a->eq(iso.backward(iso.forward(x)), x)) {
        rep.fail_with("backward(phi(x)) = x", "x=" + a->format(x));
        return iso;
      }
    }
    auto pair_check = [&](const Value& x, const Value& y) {
      rep.checked += 3;
      const std::string at = "x=" + a->format(x) + " y=" + a->format(y);
      const Value fx = iso.forward(x);
      const Value fy = iso.forward(y);
      if (!GA->eq(iso.forward(a->oplus(x, y)), GA->oplus(fx, fy))) {
        rep.fail_with("phi preserves oplus", at);
        return;
      }
      if (!a->eq(x, y) && GA->eq(fx, fy)) {
        rep.fail_with("phi is injective", at);
        return;
      }
      const bool lo = mv_leq(*a, x, y);
      if (lo != L->leq(fx, fy) || lo != mv_leq(*GA, fx, fy))
        rep.fail_with("phi preserves and reflects <=", at);
    };
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool) {
          pair_check(x, y);
          if (!rep.pass()) return iso;
        }
    } else {
      for (long long i = 0; i < opt.budget && rep.pass(); ++i)
        pair_check(a->sample(rng), a->sample(rng));
    }

    if (exhaustive) {
      // Surjectivity onto the interval: every difference pair within [0, u]
      // must be equivalent to some phi image.
      const auto seqs = enumerate_good_sequences(a, std::max(1, opt.max_len));
      for (const auto& p : seqs)
        for (const auto& q : seqs) {
          const Value v = make_pair_value(p, q);
          if (!L->leq(L->zero(), v) || !L->leq(v, L->unit())) continue;
          rep.checked += 1;
          bool hit = false;
          for (const auto& b : pool)
            if (GA->eq(v, iso.forward(b))) {
              hit = true;
              break;
            }
          if (!hit) {
            rep.fail_with("phi is surjective onto the interval", L->format(v) + " has no preimage");
            return iso;
          }
        }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return iso;
}

IsoWitness psi(const LPtr& g, const CheckOptions& opt) {
  MvPtr GA = gamma(g);
  LPtr LGA = l_group(GA);

  IsoWitness iso;
  iso.description = "psi: " + g->name() + " -> " + LGA->name();
  LPtr g_keep = g;
  MvPtr GA_keep = GA;
  iso.forward = [g_keep, GA_keep](const Value& x) {
    return make_pair_value(good_decompose(g_keep, pos_part(*g_keep, x), GA_keep),
                           good_decompose(g_keep, neg_part(*g_keep, x), GA_keep));
  };
  iso.backward = [g_keep, GA_keep](const Value& v) {
    return g_keep->sub(sum_components(*g_keep, pair_pos(GA_keep, v)),
                       sum_components(*g_keep, pair_neg(GA_keep, v)));
  };

  Report& rep = iso.report;
  rep.check = "psi-roundtrip";
  rep.subject = g->name();
  rep.seed = opt.seed;
  rep.mode = "sampled";
  Rng rng(opt.seed);
  const auto pool = element_pool(*g, opt.budget, rng, nullptr);

  try {
    rep.checked += 3;
    if (!LGA->eq(iso.forward(g->zero()), LGA->zero())) {
      rep.fail_with("psi preserves 0", "");
      return iso;
    }
    if (!LGA->eq(iso.forward(g->unit()), LGA->unit())) {
      rep.fail_with("psi preserves the unit", "");
      return iso;
    }
    // The inverse sends the one-term unit sequence to u, exactly.
    if (!g->eq(iso.backward(LGA->unit()), g->unit())) {
      rep.fail_with("f((u)) = u", "f(unit pair)=" + g->format(iso.backward(LGA->unit())));
      return iso;
    }
    for (const auto& x : pool) {
      rep.checked += 2;
      if (!g->eq(iso.backward(iso.forward(x)), x)) {
        rep.fail_with("f(psi(x)) = x", "x=" + g->format(x));
        return iso;
      }
      if (!LGA->eq(iso.forward(g->neg(x)), LGA->neg(iso.forward(x)))) {
        rep.fail_with("psi preserves neg", "x=" + g->format(x));
        return iso;
      }
    }
    auto pair_check = [&](const Value& x, const Value& y) {
      rep.checked += 4;
      const std::string at = "x=" + g->format(x) + " y=" + g->format(y);
      const Value fx = iso.forward(x);
      const Value fy = iso.forward(y);
      if (!LGA->eq(iso.forward(g->add(x, y)), LGA->add(fx, fy))) {
        rep.fail_with("psi preserves +", at);
        return;
      }
      if (!LGA->eq(iso.forward(g->inf(x, y)), LGA->inf(fx, fy))) {
        rep.fail_with("psi preserves inf", at);
        return;
      }
      if (!LGA->eq(iso.forward(g->sup(x, y)), LGA->sup(fx, fy))) {
        rep.fail_with("psi preserves sup", at);
        return;
      }
      if (g->leq(x, y) != LGA->leq(fx, fy)) rep.fail_with("psi preserves and reflects <=", at);
    };
    const size_t k = pool.size();
    for (size_t i = 0; i < k && rep.pass(); ++i) pair_check(pool[i], pool[(i * 7 + 3) % k]);
    for (long long i = 0; i < opt.budget && rep.pass(); ++i) pair_check(g->sample(rng), g->sample(rng));
    if (!rep.pass()) return iso;

    // psi after f is the identity on sampled difference pairs over [0, u].
    for (long long i = 0; i < opt.budget; ++i) {
      const Value v = LGA->sample(rng);
      rep.checked += 1;
      if (!LGA->eq(iso.forward(iso.backward(v)), v)) {
        rep.fail_with("psi(f(v)) = v", "v=" + LGA->format(v));
        return iso;
      }
    }

    // The inverse respects the monoid and lattice structure of sequences.
    for (long long i = 0; i < opt.budget; ++i) {
      const GoodSequence p = good_decompose(g, pos_part(*g, g->sample(rng)), GA);
      const GoodSequence q = good_decompose(g, pos_part(*g, g->sample(rng)), GA);
      const Value sp = sum_components(*g, p);
      const Value sq = sum_components(*g, q);
      rep.checked += 3;
      if (!g->eq(sum_components(*g, good_sum(p, q)), g->add(sp, sq))) {
        rep.fail_with("f(p + q) = f(p) + f(q)", "p=" + p.str() + " q=" + q.str());
        return iso;
      }
      if (!g->eq(sum_components(*g, good_inf(p, q)), g->inf(sp, sq))) {
        rep.fail_with("f(inf(p,q)) = inf(f(p),f(q))", "p=" + p.str() + " q=" + q.str());
        return iso;
      }
      if (!g->eq(sum_components(*g, good_sup(p, q)), g->sup(sp, sq))) {
        rep.fail_with("f(sup(p,q)) = sup(f(p),f(q))", "p=" + p.str() + " q=" + q.str());
        return iso;
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return iso;
}

Report check_phi_naturality(const MvHom& h, const CheckOptions& opt) {
  Report rep;
  rep.check = "phi-naturality";
  rep.subject = (h.label.empty() ? std::string("h") : h.label) + ": " + h.source->name() + " -> " +
                h.target->name();
  rep.seed = opt.seed;
  MvPtr A = h.source;
  MvPtr B = h.target;
  try {
    const LHom Lh = l_hom(h);
    const MvHom GLh = gamma_hom(Lh, opt);
    MvPtr GB = GLh.target;
    Rng rng(opt.seed);
    bool exhaustive = false;
    const auto pool = element_pool(*A, opt.budget, rng, &exhaustive);
    rep.mode = exhaustive ? "exhaustive" : "sampled";
    for (const auto& x : pool) {
      rep.checked += 1;
      const Value via_target = phi_image(B, h(x));
      const Value via_source = GLh(phi_image(A, x));
      if (!GB->eq(via_target, via_source)) {
        rep.fail_with("phi square commutes",
                      "x=" + A->format(x) + ": " + GB->format(via_target) + " vs " +
                          GB->format(via_source));
        return rep;
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_psi_naturality(const LHom& h, const CheckOptions& opt) {
  Report rep;
  rep.check = "psi-naturality";
  rep.subject = (h.label.empty() ? std::string("h") : h.label) + ": " + h.source->name() + " -> " +
                h.target->name();
  rep.seed = opt.seed;
  rep.mode = "sampled";
  try {
    const MvHom Gh = gamma_hom(h, opt);
    const LHom LGh = l_hom(Gh);
    MvPtr GA = Gh.source;
    MvPtr GB = Gh.target;
    LPtr LGB = LGh.target;
    auto fwd = [](const LPtr& g, const MvPtr& ga, const Value& x) {
      return make_pair_value(good_decompose(g, pos_part(*g, x), ga),
                             good_decompose(g, neg_part(*g, x), ga));
    };
    Rng rng(opt.seed);
    const auto pool = element_pool(*h.source, opt.budget, rng, nullptr);
    for (const auto& x : pool) {
      rep.checked += 1;
      const Value via_target = fwd(h.target, GB, h(x));
      const Value via_source = LGh(fwd(h.source, GA, x));
      if (!LGB->eq(via_target, via_source)) {
        rep.fail_with("psi square commutes",
                      "x=" + h.source->format(x) + ": " + LGB->format(via_target) + " vs " +
                          LGB->format(via_source));
        return rep;
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_chain_group_oracle(long long n, const CheckOptions& opt) {
  Report rep;
  rep.check = "chain-group-oracle";
  rep.subject = "L(L" + std::to_string(n) + ") ~ Z(u=" + std::to_string(n) + ")";
  rep.mode = "exhaustive";
  try {
    MvPtr a = make_chain(n);
    LPtr L = l_group(a);

    // Independent evaluation: plain rational sums of the raw components,
    // scaled to integers. No group operation is involved.
    auto eval = [&](const Value& v) -> long long {
      Rat total(0);
      for (const auto& c : v.as_tuple().at(0).as_tuple()) total = total + c.as_rat();
      for (const auto& c : v.as_tuple().at(1).as_tuple()) total = total - c.as_rat();
      const Rat scaled = total * Rat(n);
      if (!scaled.is_integer())
        fail(Errc::InvariantViolation, "chain sums must scale to integers");
      return scaled.num;
    };

    const auto seqs = enumerate_good_sequences(a, std::max(1, opt.max_len));
    std::vector<Value> pairs;
    for (const auto& p : seqs)
      for (const auto& q : seqs) pairs.push_back(make_pair_value(p, q));

    rep.checked += 2;
    if (eval(L->zero()) != 0) {
      rep.fail_with("0 maps to 0", "");
      return rep;
    }
    if (eval(L->unit()) != n) {
      rep.fail_with("u maps to n", "got " + std::to_string(eval(L->unit())));
      return rep;
    }

    std::vector<bool> covered(static_cast<size_t>(2 * n * opt.max_len + 1), false);
    for (const auto& v : pairs) {
      const long long e = eval(v);
      covered[static_cast<size_t>(e + n * opt.max_len)] = true;
      rep.checked += 2;
      if (eval(L->neg(v)) != -e) {
        rep.fail_with("negation agrees", L->format(v));
        return rep;
      }
      const auto b = L->unit_bound(v);
      if (!b || std::abs(e) > *b * n) {
        rep.fail_with("unit bound dominates the evaluation", L->format(v));
        return rep;
      }
    }
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t j = 0; j < pairs.size(); ++j) {
        const Value& v = pairs[i];
        const Value& w = pairs[j];
        const long long ev = eval(v);
        const long long ew = eval(w);
        rep.checked += 5;
        if (L->eq(v, w) != (ev == ew)) {
          rep.fail_with("equality agrees (well-defined and injective)",
                        L->format(v) + " vs " + L->format(w));
          return rep;
        }
        if (L->leq(v, w) != (ev <= ew)) {
          rep.fail_with("order agrees", L->format(v) + " vs " + L->format(w));
          return rep;
        }
        if (eval(L->add(v, w)) != ev + ew) {
          rep.fail_with("addition agrees", L->format(v) + " + " + L->format(w));
          return rep;
        }
        if (eval(L->inf(v, w)) != std::min(ev, ew)) {
          rep.fail_with("inf agrees", L->format(v) + " inf " + L->format(w));
          return rep;
        }
        if (eval(L->sup(v, w)) != std::max(ev, ew)) {
          rep.fail_with("sup agrees", L->format(v) + " sup " + L->format(w));
          return rep;
        }
      }
    for (size_t i = 0; i < covered.size(); ++i) {
      rep.checked += 1;
      if (!covered[i]) {
        rep.fail_with("every integer in range is reached",
                      "missing " + std::to_string(static_cast<long long>(i) - n * opt.max_len));
        return rep;
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

}  // namespace mundici
