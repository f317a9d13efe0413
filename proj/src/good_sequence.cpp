#include "mundici/good_sequence.hpp"

#include <sstream>

#include "mundici/errors.hpp"

namespace mundici {

GoodSequence GoodSequence::normalize(MvPtr a, std::vector<Value> raw) {
  if (!a) fail(Errc::BadInput, "good sequence without an algebra");
  while (!raw.empty() && a->eq(raw.back(), a->zero())) raw.pop_back();
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!a->contains(raw[i]))
      fail(Errc::NotAGoodSequence,
           "component " + std::to_string(i + 1) + " is not in " + a->name());
  }
  for (size_t i = 0; i + 1 < raw.size(); ++i) {
    if (!a->eq(a->oplus(raw[i], raw[i + 1]), raw[i]))
      fail(Errc::NotAGoodSequence, "absorption fails at index " + std::to_string(i + 1));
  }
  return GoodSequence(std::move(a), std::move(raw));
}

GoodSequence GoodSequence::trusted(MvPtr a, std::vector<Value> raw) {
  if (!a) fail(Errc::BadInput, "good sequence without an algebra");
  while (!raw.empty() && a->eq(raw.back(), a->zero())) raw.pop_back();
  return GoodSequence(std::move(a), std::move(raw));
}

GoodSequence GoodSequence::zero(MvPtr a) { return normalize(std::move(a), {}); }

GoodSequence GoodSequence::unit(MvPtr a) {
  Value one = a->one();
  return normalize(std::move(a), {one});
}

GoodSequence GoodSequence::ones(MvPtr a, int m) {
  std::vector<Value> comps(static_cast<size_t>(m), a->one());
  return normalize(std::move(a), std::move(comps));
}

GoodSequence GoodSequence::single(MvPtr a, Value v) { return normalize(std::move(a), {std::move(v)}); }

const Value& GoodSequence::at(int i) const {
  if (i < 1) fail(Errc::BadInput, "good sequence indices are 1-based");
  if (i > length()) return zero_;
  return comps_[static_cast<size_t>(i - 1)];
}

std::string GoodSequence::str() const {
  if (comps_.empty()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ",";
    out += alg_->format(comps_[i]);
  }
  return out + ")";
}

Value GoodSequence::encode() const { return Value(Value::Tuple(comps_.begin(), comps_.end())); }

GoodSequence GoodSequence::decode(MvPtr a, const Value& v) {
  const auto& t = v.as_tuple();
  return normalize(std::move(a), std::vector<Value>(t.begin(), t.end()));
}

GoodSequence GoodSequence::decode_trusted(MvPtr a, const Value& v) {
  const auto& t = v.as_tuple();
  return trusted(std::move(a), std::vector<Value>(t.begin(), t.end()));
}

void require_same_algebra(const GoodSequence& x, const GoodSequence& y) {
  if (x.algebra() == y.algebra()) return;
  if (x.algebra()->name() == y.algebra()->name()) return;
  fail(Errc::AlgebraMismatch,
       x.algebra()->name() + " vs " + y.algebra()->name());
}

bool good_eq(const GoodSequence& x, const GoodSequence& y) {
  require_same_algebra(x, y);
  if (x.length() != y.length()) return false;
  const MvAlgebra& a = *x.algebra();
  for (int i = 1; i <= x.length(); ++i)
    if (!a.eq(x.at(i), y.at(i))) return false;
  return true;
}

GoodSequence good_sum(const GoodSequence& x, const GoodSequence& y) {
  require_same_algebra(x, y);
  const MvAlgebra& a = *x.algebra();
  const Value one = a.one();
  const int m = x.length();
  const int n = y.length();
  std::vector<Value> out;
  out.reserve(static_cast<size_t>(m + n));
  // c_i = oplus over j of (x_{i-j} odot y_j), reading index 0 as neg 0.
  // The j = 0 and j = i terms reduce to x_i and y_i; terms whose index lies
  // past either support are zero and drop out of the fold, and the fold
  // stops once it saturates at neg 0 (absorbing for oplus).
  for (int i = 1; i <= m + n; ++i) {
    Value c = a.zero();
    const int lo = std::max(0, i - m);
    const int hi = std::min(i, n);
    for (int j = lo; j <= hi; ++j) {
      if (j == 0)
        c = a.oplus(c, x.at(i));
      else if (j == i)
        c = a.oplus(c, y.at(i));
      else
        c = a.oplus(c, a.odot(x.at(i - j), y.at(j)));
      if (a.eq(c, one)) break;
    }
    out.push_back(std::move(c));
  }
  return GoodSequence::normalize(x.algebra(), std::move(out));
}

bool good_leq(const GoodSequence& x, const GoodSequence& y) {
  require_same_algebra(x, y);
  const MvAlgebra& a = *x.algebra();
  const int n = std::max(x.length(), y.length());
  for (int i = 1; i <= n; ++i)
    if (!mv_leq(a, x.at(i), y.at(i))) return false;
  return true;
}

GoodSequence good_inf(const GoodSequence& x, const GoodSequence& y) {
  require_same_algebra(x, y);
  const MvAlgebra& a = *x.algebra();
  const int n = std::max(x.length(), y.length());
  std::vector<Value> out;
  for (int i = 1; i <= n; ++i) out.push_back(mv_inf(a, x.at(i), y.at(i)));
  return GoodSequence::normalize(x.algebra(), std::move(out));
}

GoodSequence good_sup(const GoodSequence& x, const GoodSequence& y) {
  require_same_algebra(x, y);
  const MvAlgebra& a = *x.algebra();
  const int n = std::max(x.length(), y.length());
  std::vector<Value> out;
  for (int i = 1; i <= n; ++i) out.push_back(mv_sup(a, x.at(i), y.at(i)));
  return GoodSequence::normalize(x.algebra(), std::move(out));
}

std::vector<GoodSequence> enumerate_good_sequences(const MvPtr& a, int max_len) {
  const auto elems = a->elements();
  std::vector<GoodSequence> out{GoodSequence::zero(a)};
  // Extend right-to-left: a prefix element must absorb the current head.
  std::vector<std::vector<Value>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Value>> next;
    for (const auto& tail : frontier) {
      for (const auto& e : elems) {
        if (tail.empty()) {
          if (a->eq(e, a->zero())) continue;  // trimmed form has a nonzero last entry
        } else if (!a->eq(a->oplus(e, tail.front()), e)) {
          continue;
        }
        std::vector<Value> seq;
        seq.push_back(e);
        seq.insert(seq.end(), tail.begin(), tail.end());
        next.push_back(seq);
      }
    }
    for (const auto& seq : next) out.push_back(GoodSequence::normalize(a, seq));
    frontier = std::move(next);
  }
  return out;
}

GoodSequence sample_good_sequence(const MvPtr& a, int max_len, Rng& rng) {
  GoodSequence acc = GoodSequence::zero(a);
  const long long parts = rng.below(max_len + 1);
  for (long long i = 0; i < parts; ++i)
    acc = good_sum(acc, GoodSequence::single(a, a->sample(rng)));
  return acc;
}

namespace {

// Triple streams over sequences: exhaustive on small finite carriers,
// sampled otherwise.
struct SeqPool {
  std::vector<GoodSequence> seqs;
  bool exhaustive = false;
};

SeqPool seq_pool(const MvPtr& a, const CheckOptions& opt, Rng& rng) {
  SeqPool p;
  if (a->finite()) {
    p.seqs = enumerate_good_sequences(a, opt.max_len);
    const long long n = static_cast<long long>(p.seqs.size());
    if (n * n * n <= 1000000) {
      p.exhaustive = true;
      return p;
    }
  }
  p.seqs.clear();
  p.seqs.push_back(GoodSequence::zero(a));
  p.seqs.push_back(GoodSequence::unit(a));
  while (static_cast<long long>(p.seqs.size()) < std::max<long long>(8, opt.budget / 8))
    p.seqs.push_back(sample_good_sequence(a, opt.max_len, rng));
  return p;
}

}  // namespace

Report check_monoid_laws(const MvPtr& a, const CheckOptions& opt) {
  Report rep;
  rep.check = "monoid-laws";
  rep.subject = a->name();
  rep.seed = opt.seed;
  Rng rng(opt.seed);
  const SeqPool pool = seq_pool(a, opt, rng);
  rep.mode = pool.exhaustive ? "exhaustive" : "sampled";
  const auto& S = pool.seqs;
  const GoodSequence zero = GoodSequence::zero(a);

  auto at2 = [](const GoodSequence& x, const GoodSequence& y) {
    return "x=" + x.str() + " y=" + y.str();
  };

  try {
    for (const auto& x : S) {
      rep.checked += 1;
      if (!good_eq(good_sum(x, zero), x)) {
        rep.fail_with("identity (x + (0) = x)", "x=" + x.str());
        return rep;
      }
    }
    auto binary = [&](const GoodSequence& x, const GoodSequence& y) {
      rep.checked += 4;
      if (!good_eq(good_sum(x, y), good_sum(y, x))) {
        rep.fail_with("commutativity", at2(x, y));
        return;
      }
      const bool le = good_leq(x, y);
      if (le != good_eq(good_inf(x, y), x)) {
        rep.fail_with("order matches lattice (x <= y iff inf(x,y) = x)", at2(x, y));
        return;
      }
      if (!good_leq(good_inf(x, y), x) || !good_leq(good_inf(x, y), y)) {
        rep.fail_with("inf is a lower bound", at2(x, y));
        return;
      }
      if (!good_leq(x, good_sup(x, y)) || !good_leq(y, good_sup(x, y)))
        rep.fail_with("sup is an upper bound", at2(x, y));
    };
    auto ternary = [&](const GoodSequence& x, const GoodSequence& y, const GoodSequence& z) {
      rep.checked += 2;
      if (!good_eq(good_sum(x, good_sum(y, z)), good_sum(good_sum(x, y), z))) {
        rep.fail_with("associativity", at2(x, y) + " z=" + z.str());
        return;
      }
      if (good_leq(x, y) && !good_leq(good_sum(x, z), good_sum(y, z)))
        rep.fail_with("translation invariance of <=", at2(x, y) + " z=" + z.str());
    };

    if (pool.exhaustive) {
      for (const auto& x : S)
        for (const auto& y : S) {
          binary(x, y);
          if (!rep.pass()) return rep;
        }
      for (const auto& x : S)
        for (const auto& y : S)
          for (const auto& z : S) {
            ternary(x, y, z);
            if (!rep.pass()) return rep;
          }
    } else {
      const size_t k = S.size();
      for (long long t = 0; t < opt.budget && rep.pass(); ++t) {
        const auto& x = S[static_cast<size_t>(rng.below(static_cast<long long>(k)))];
        const auto& y = S[static_cast<size_t>(rng.below(static_cast<long long>(k)))];
        const auto& z = S[static_cast<size_t>(rng.below(static_cast<long long>(k)))];
        binary(x, y);
        if (!rep.pass()) break;
        ternary(x, y, z);
      }
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

Report check_cancellation(const MvPtr& a, const CheckOptions& opt) {
  Report rep;
  rep.check = "cancellation";
  rep.subject = a->name();
  rep.seed = opt.seed;
  Rng rng(opt.seed);
  const SeqPool pool = seq_pool(a, opt, rng);
  rep.mode = pool.exhaustive ? "exhaustive" : "sampled";
  const auto& S = pool.seqs;
  auto probe = [&](const GoodSequence& x, const GoodSequence& y, const GoodSequence& z) {
    rep.checked += 1;
    if (good_eq(good_sum(x, y), good_sum(x, z)) && !good_eq(y, z))
      rep.fail_with("cancellation (x+y = x+z forces y = z)",
                    "x=" + x.str() + " y=" + y.str() + " z=" + z.str());
  };
  try {
    if (pool.exhaustive) {
      for (const auto& x : S)
        for (const auto& y : S)
          for (const auto& z : S) {
            probe(x, y, z);
            if (!rep.pass()) return rep;
          }
    } else {
      const size_t k = S.size();
      for (long long t = 0; t < opt.budget && rep.pass(); ++t)
        probe(S[static_cast<size_t>(rng.below(static_cast<long long>(k)))],
              S[static_cast<size_t>(rng.below(static_cast<long long>(k)))],
              S[static_cast<size_t>(rng.below(static_cast<long long>(k)))]);
    }
  } catch (const Error& e) {
    rep.fail_with("operation error", e.what());
  }
  return rep;
}

}  // namespace mundici
