#include "mundici/logic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mundici/errors.hpp"
#include "mundici/functors.hpp"

namespace mundici {

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.var = std::move(name);
  return t;
}
Term Term::zero() { return Term{}; }
Term Term::unit() {
  Term t;
  t.kind = Kind::Unit;
  return t;
}
Term Term::apply(Kind k, std::vector<Term> args) {
  Term t;
  t.kind = k;
  t.args = std::move(args);
  return t;
}

Formula Formula::truth() { return Formula{}; }
Formula Formula::eq(Term l, Term r) {
  Formula f;
  f.kind = Kind::Eq;
  f.terms = {std::move(l), std::move(r)};
  return f;
}
Formula Formula::leq(Term l, Term r) {
  Formula f;
  f.kind = Kind::Leq;
  f.terms = {std::move(l), std::move(r)};
  return f;
}
Formula Formula::conj(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::And;
  f.subs = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::disj(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Or;
  f.subs = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::exists(std::string v, Formula f) {
  Formula out;
  out.kind = Kind::Exists;
  out.var = std::move(v);
  out.subs = {std::move(f)};
  return out;
}
Formula Formula::bigvee(std::string v, long long n, Formula f) {
  Formula out;
  out.kind = Kind::BigVee;
  out.var = std::move(v);
  out.bound = n;
  out.subs = {std::move(f)};
  return out;
}

Sig join_sig(Sig a, Sig b) {
  if (a == Sig::Neutral) return b;
  if (b == Sig::Neutral) return a;
  if (a != b) fail(Errc::SignatureMismatch, "term mixes the two signatures");
  return a;
}

Sig signature_of(const Term& t) {
  Sig s = Sig::Neutral;
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::Zero: break;
    case Term::Kind::Neg:
    case Term::Kind::Oplus:
    case Term::Kind::Odot: s = Sig::Mv; break;
    case Term::Kind::Unit:
    case Term::Kind::Add:
    case Term::Kind::Minus:
    case Term::Kind::Inf:
    case Term::Kind::Sup: s = Sig::Lu; break;
  }
  for (const auto& a : t.args) s = join_sig(s, signature_of(a));
  return s;
}

Sig signature_of(const Formula& f) {
  Sig s = Sig::Neutral;
  for (const auto& t : f.terms) s = join_sig(s, signature_of(t));
  for (const auto& sub : f.subs) s = join_sig(s, signature_of(sub));
  return s;
}

Sig signature_of(const Sequent& s) {
  return join_sig(signature_of(s.premise), signature_of(s.conclusion));
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  if (t.kind == Term::Kind::Var) out.insert(t.var);
  for (const auto& a : t.args) {
    auto sub = free_vars(a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  for (const auto& t : f.terms) {
    auto sub = free_vars(t);
    out.insert(sub.begin(), sub.end());
  }
  for (const auto& s : f.subs) {
    auto sub = free_vars(s);
    out.insert(sub.begin(), sub.end());
  }
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::BigVee) out.erase(f.var);
  return out;
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return t.var;
    case Term::Kind::Zero: return "0";
    case Term::Kind::Unit: return "u";
    case Term::Kind::Neg: return "neg(" + to_string(t.args[0]) + ")";
    case Term::Kind::Minus: return "minus(" + to_string(t.args[0]) + ")";
    case Term::Kind::Oplus: return "oplus(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case Term::Kind::Odot: return "odot(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case Term::Kind::Add: return "add(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case Term::Kind::Inf: return "inf(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
    case Term::Kind::Sup: return "sup(" + to_string(t.args[0]) + "," + to_string(t.args[1]) + ")";
  }
  return "?";
}

namespace {

// levels: 0 = disjunction position, 1 = conjunction position, 2 = atom position
std::string fmt_formula(const Formula& f, int level) {
  switch (f.kind) {
    case Formula::Kind::True: return "tt";
    case Formula::Kind::Eq: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case Formula::Kind::Leq: return to_string(f.terms[0]) + " <= " + to_string(f.terms[1]);
    case Formula::Kind::And: {
      const std::string s = fmt_formula(f.subs[0], 1) + " & " + fmt_formula(f.subs[1], 1);
      return level >= 2 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Or: {
      const std::string s = fmt_formula(f.subs[0], 0) + " \\/ " + fmt_formula(f.subs[1], 0);
      return level >= 1 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Exists: {
      const std::string s = "exists " + f.var + ". " + fmt_formula(f.subs[0], 0);
      return level >= 1 ? "(" + s + ")" : s;
    }
    case Formula::Kind::BigVee: {
      const std::string s = "bigvee " + f.var + "<=" + std::to_string(f.bound) + ". " +
                            fmt_formula(f.subs[0], 0);
      return level >= 1 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

}  // namespace

std::string to_string(const Formula& f) { return fmt_formula(f, 0); }

std::string to_string(const Sequent& s) {
  std::string ctx;
  for (size_t i = 0; i < s.context.size(); ++i) ctx += (i ? "," : "") + s.context[i];
  return to_string(s.premise) + " |- [" + ctx + "] " + to_string(s.conclusion);
}

namespace {

struct Lexer {
  std::string text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  bool peek_symbol(const std::string& s) {
    skip();
    return text.compare(pos, s.size(), s) == 0;
  }
  bool eat_symbol(const std::string& s) {
    if (!peek_symbol(s)) return false;
    pos += s.size();
    return true;
  }
  void expect_symbol(const std::string& s) {
    if (!eat_symbol(s)) fail(Errc::ParseError, "expected '" + s + "' at offset " + std::to_string(pos));
  }
  bool peek_ident() {
    skip();
    return pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_');
  }
  std::string ident() {
    skip();
    if (!peek_ident()) fail(Errc::ParseError, "expected identifier at offset " + std::to_string(pos));
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    return text.substr(start, pos - start);
  }
  bool peek_number() {
    skip();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  long long number() {
    skip();
    if (!peek_number()) fail(Errc::ParseError, "expected number at offset " + std::to_string(pos));
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }
};

struct Parser {
  Lexer lex;

  Term term() {
    if (lex.peek_number()) {
      const long long n = lex.number();
      if (n != 0) fail(Errc::ParseError, "the only numeric term is 0");
      return Term::zero();
    }
    const std::string id = lex.ident();
    auto binary = [&](Term::Kind k) {
      lex.expect_symbol("(");
      Term a = term();
      lex.expect_symbol(",");
      Term b = term();
      lex.expect_symbol(")");
      return Term::apply(k, {std::move(a), std::move(b)});
    };
    auto unary = [&](Term::Kind k) {
      lex.expect_symbol("(");
      Term a = term();
      lex.expect_symbol(")");
      return Term::apply(k, {std::move(a)});
    };
    if (id == "u") return Term::unit();
    if (id == "neg") return unary(Term::Kind::Neg);
    if (id == "minus") return unary(Term::Kind::Minus);
    if (id == "oplus") return binary(Term::Kind::Oplus);
    if (id == "odot") return binary(Term::Kind::Odot);
    if (id == "add") return binary(Term::Kind::Add);
    if (id == "inf") return binary(Term::Kind::Inf);
    if (id == "sup") return binary(Term::Kind::Sup);
    if (id == "tt" || id == "exists" || id == "bigvee")
      fail(Errc::ParseError, "'" + id + "' is not a term");
    return Term::variable(id);
  }

  Formula atom_or_group() {
    if (lex.eat_symbol("(")) {
      Formula f = formula();
      lex.expect_symbol(")");
      return f;
    }
    {
      // keyword lookahead without consuming
      Lexer save = lex;
      if (lex.peek_ident()) {
        const std::string id = lex.ident();
        if (id == "tt") return Formula::truth();
        if (id == "exists") {
          const std::string v = lex.ident();
          lex.expect_symbol(".");
          return Formula::exists(v, formula());
        }
        if (id == "bigvee") {
          const std::string v = lex.ident();
          lex.expect_symbol("<=");
          const long long n = lex.number();
          lex.expect_symbol(".");
          return Formula::bigvee(v, n, formula());
        }
        lex = save;
      }
    }
    Term l = term();
    if (lex.eat_symbol("<=")) return Formula::leq(std::move(l), term());
    lex.expect_symbol("=");
    return Formula::eq(std::move(l), term());
  }

  Formula conjunction() {
    Formula f = atom_or_group();
    while (lex.eat_symbol("&")) f = Formula::conj(std::move(f), atom_or_group());
    return f;
  }

  Formula formula() {
    Formula f = conjunction();
    while (lex.eat_symbol("\\/")) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Sequent sequent() {
    Sequent s;
    s.premise = formula();
    lex.expect_symbol("|-");
    lex.expect_symbol("[");
    if (!lex.peek_symbol("]")) {
      s.context.push_back(lex.ident());
      while (lex.eat_symbol(",")) s.context.push_back(lex.ident());
    }
    lex.expect_symbol("]");
    s.conclusion = formula();
    return s;
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p{Lexer{text}};
  Term t = p.term();
  if (!p.lex.done()) fail(Errc::ParseError, "trailing input after term");
  return t;
}

Formula parse_formula(const std::string& text) {
  Parser p{Lexer{text}};
  Formula f = p.formula();
  if (!p.lex.done()) fail(Errc::ParseError, "trailing input after formula");
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser p{Lexer{text}};
  Sequent s = p.sequent();
  if (!p.lex.done()) fail(Errc::ParseError, "trailing input after sequent");
  std::set<std::string> free = free_vars(s.premise);
  auto cfree = free_vars(s.conclusion);
  free.insert(cfree.begin(), cfree.end());
  for (const auto& v : free)
    if (std::find(s.context.begin(), s.context.end(), v) == s.context.end())
      fail(Errc::UnboundVariable, "free variable '" + v + "' is not in the context");
  signature_of(s);  // reject mixed-signature sequents early
  return s;
}

std::string Model::name() const { return mv ? mv->name() : lu->name(); }

namespace {

std::string model_format(const Model& m, const Value& v) {
  return m.mv ? m.mv->format(v) : m.lu->format(v);
}
bool model_eq(const Model& m, const Value& a, const Value& b) {
  return m.mv ? m.mv->eq(a, b) : m.lu->eq(a, b);
}
bool model_leq(const Model& m, const Value& a, const Value& b) {
  return m.mv ? mv_leq(*m.mv, a, b) : m.lu->leq(a, b);
}
bool model_finite(const Model& m) { return m.mv ? m.mv->finite() : false; }
std::vector<Value> model_elements(const Model& m) { return m.mv->elements(); }
Value model_sample(const Model& m, Rng& rng) {
  return m.mv ? m.mv->sample(rng) : m.lu->sample(rng);
}
std::vector<Value> model_probes(const Model& m) { return m.mv ? m.mv->probes() : m.lu->probes(); }

// Value of the bigvee index k when used as a term.
Value realized_index(const Model& m, long long k) {
  if (m.lu) return m.lu->scale(k, m.lu->unit());
  return k == 0 ? m.mv->zero() : m.mv->one();
}

std::string env_str(const Model& m, const Env& env) {
  std::string out;
  for (const auto& [k, v] : env) {
    if (!out.empty()) out += ", ";
    out += k + "=" + model_format(m, v);
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::False;
}

Value eval_term(const Model& m, const Env& env, const Term& t) {
  auto need_mv = [&]() -> const MvAlgebra& {
    if (!m.mv) fail(Errc::SignatureMismatch, "MV operation evaluated in a group model");
    return *m.mv;
  };
  auto need_lu = [&]() -> const LGroupU& {
    if (!m.lu) fail(Errc::SignatureMismatch, "group operation evaluated in an MV model");
    return *m.lu;
  };
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.var);
      if (it == env.end()) fail(Errc::UnboundVariable, "variable '" + t.var + "' has no binding");
      return it->second;
    }
    case Term::Kind::Zero: return m.mv ? m.mv->zero() : m.lu->zero();
    case Term::Kind::Unit: return need_lu().unit();
    case Term::Kind::Neg: return need_mv().neg(eval_term(m, env, t.args[0]));
    case Term::Kind::Oplus:
      return need_mv().oplus(eval_term(m, env, t.args[0]), eval_term(m, env, t.args[1]));
    case Term::Kind::Odot: {
      const MvAlgebra& a = need_mv();
      return odot(a, eval_term(m, env, t.args[0]), eval_term(m, env, t.args[1]));
    }
    case Term::Kind::Add:
      return need_lu().add(eval_term(m, env, t.args[0]), eval_term(m, env, t.args[1]));
    case Term::Kind::Minus: return need_lu().neg(eval_term(m, env, t.args[0]));
    case Term::Kind::Inf:
      return need_lu().inf(eval_term(m, env, t.args[0]), eval_term(m, env, t.args[1]));
    case Term::Kind::Sup:
      return need_lu().sup(eval_term(m, env, t.args[0]), eval_term(m, env, t.args[1]));
  }
  fail(Errc::InvariantViolation, "unhandled term kind");
}

Tri holds(const Model& m, const Env& env, const Formula& f, const CheckOptions& opt) {
  switch (f.kind) {
    case Formula::Kind::True: return Tri::True;
    case Formula::Kind::Eq:
      return model_eq(m, eval_term(m, env, f.terms[0]), eval_term(m, env, f.terms[1]))
                 ? Tri::True
                 : Tri::False;
    case Formula::Kind::Leq:
      return model_leq(m, eval_term(m, env, f.terms[0]), eval_term(m, env, f.terms[1]))
                 ? Tri::True
                 : Tri::False;
    case Formula::Kind::And: return tri_and(holds(m, env, f.subs[0], opt), holds(m, env, f.subs[1], opt));
    case Formula::Kind::Or: return tri_or(holds(m, env, f.subs[0], opt), holds(m, env, f.subs[1], opt));
    case Formula::Kind::Exists: {
      Env inner = env;
      if (model_finite(m)) {
        Tri acc = Tri::False;
        for (const auto& e : model_elements(m)) {
          inner[f.var] = e;
          acc = tri_or(acc, holds(m, inner, f.subs[0], opt));
          if (acc == Tri::True) return Tri::True;
        }
        return acc;
      }
      // Parametric carrier: a bounded witness search. Exhausting the budget
      // leaves the existential unknown, never false.
      Rng rng(opt.seed);
      std::vector<Value> cands = model_probes(m);
      for (const auto& [k, v] : env) cands.push_back(v);
      while (static_cast<long long>(cands.size()) < opt.budget) cands.push_back(model_sample(m, rng));
      for (const auto& e : cands) {
        inner[f.var] = e;
        if (holds(m, inner, f.subs[0], opt) == Tri::True) return Tri::True;
      }
      return Tri::Unknown;
    }
    case Formula::Kind::BigVee: {
      // Bound policy: the written bound, stretched by unit_bound witnesses of
      // the environment when a group is in scope.
      long long bound = f.bound;
      if (m.lu) {
        for (const auto& [k, v] : env) {
          const auto w = m.lu->unit_bound(l_abs(*m.lu, v));
          if (w) bound = std::max(bound, *w);
        }
      }
      Env inner = env;
      for (long long k = 0; k <= bound; ++k) {
        inner[f.var] = realized_index(m, k);
        if (holds(m, inner, f.subs[0], opt) == Tri::True) return Tri::True;
      }
      return Tri::Unknown;  // the family stands for an unbounded disjunction
    }
  }
  fail(Errc::InvariantViolation, "unhandled formula kind");
}

namespace {

// Environment stream: exhaustive over finite carriers (capped), otherwise
// probe combinations followed by random draws.
std::vector<Env> env_stream(const Model& m, const std::vector<std::string>& ctx,
                            const CheckOptions& opt, bool* exhaustive) {
  std::vector<Env> out;
  const size_t n = ctx.size();
  if (n == 0) {
    out.push_back({});
    if (exhaustive) *exhaustive = true;
    return out;
  }
  if (model_finite(m)) {
    const auto elems = model_elements(m);
    double total = 1;
    for (size_t i = 0; i < n; ++i) total *= static_cast<double>(elems.size());
    if (total <= 20000) {
      if (exhaustive) *exhaustive = true;
      std::vector<size_t> idx(n, 0);
      while (true) {
        Env e;
        for (size_t i = 0; i < n; ++i) e[ctx[i]] = elems[idx[i]];
        out.push_back(std::move(e));
        size_t i = 0;
        for (; i < n; ++i) {
          if (++idx[i] < elems.size()) break;
          idx[i] = 0;
        }
        if (i == n) break;
      }
      return out;
    }
  }
  if (exhaustive) *exhaustive = false;
  Rng rng(opt.seed);
  const auto probes = model_probes(m);
  std::vector<size_t> idx(n, 0);
  long long combos = 0;
  while (combos < 64) {
    Env e;
    for (size_t i = 0; i < n; ++i) e[ctx[i]] = probes[idx[i]];
    out.push_back(std::move(e));
    ++combos;
    size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < probes.size()) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  while (static_cast<long long>(out.size()) < opt.budget) {
    Env e;
    for (size_t i = 0; i < n; ++i) e[ctx[i]] = model_sample(m, rng);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Report check_sequent(const Model& m, const Sequent& s, const CheckOptions& opt) {
  Report rep;
  rep.check = "sequent";
  rep.subject = m.name() + " :: " + to_string(s);
  rep.seed = opt.seed;
  rep.note = "validity over this model, not provability";

  const Sig sig = signature_of(s);
  if ((sig == Sig::Mv && !m.mv) || (sig == Sig::Lu && !m.lu)) {
    rep.fail_with("signature matches model",
                  std::string("sequent signature is ") + (sig == Sig::Mv ? "MV" : "Lu"));
    return rep;
  }

  bool exhaustive = false;
  const auto envs = env_stream(m, s.context, opt, &exhaustive);
  rep.mode = exhaustive ? "exhaustive" : "sampled";
  try {
    for (const auto& env : envs) {
      rep.checked += 1;
      const Tri prem = holds(m, env, s.premise, opt);
      if (prem == Tri::False) continue;
      const Tri conc = holds(m, env, s.conclusion, opt);
      if (prem == Tri::True && conc == Tri::False) {
        rep.fail_with("conclusion fails under a premise-true environment", env_str(m, env));
        return rep;
      }
      if (conc == Tri::Unknown)
        rep.mark_unknown("conclusion undecided at bound", env_str(m, env));
    }
  } catch (const Error& e) {
    rep.fail_with("evaluation error", e.what());
  }
  return rep;
}

namespace {

Term interp_term(const Term& t) {
  auto u_minus = [](Term x) {
    return Term::apply(Term::Kind::Add, {Term::unit(), Term::apply(Term::Kind::Minus, {std::move(x)})});
  };
  switch (t.kind) {
    case Term::Kind::Var: return t;
    case Term::Kind::Zero: return t;
    case Term::Kind::Neg: return u_minus(interp_term(t.args[0]));
    case Term::Kind::Oplus:
      return Term::apply(Term::Kind::Inf,
                         {Term::unit(), Term::apply(Term::Kind::Add, {interp_term(t.args[0]),
                                                                      interp_term(t.args[1])})});
    case Term::Kind::Odot: {
      // through its definition: neg(neg x oplus neg y)
      Term expanded = Term::apply(
          Term::Kind::Neg,
          {Term::apply(Term::Kind::Oplus, {Term::apply(Term::Kind::Neg, {t.args[0]}),
                                           Term::apply(Term::Kind::Neg, {t.args[1]})})});
      return interp_term(expanded);
    }
    default:
      fail(Errc::SignatureMismatch, "interpretation applies to MV terms only: " + to_string(t));
  }
}

Formula bounds_of(const std::string& v) {
  return Formula::conj(Formula::leq(Term::zero(), Term::variable(v)),
                       Formula::leq(Term::variable(v), Term::unit()));
}

}  // namespace

Term interpret(const Term& t) { return interp_term(t); }

Formula interpret(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::True: return f;
    case Formula::Kind::Eq: return Formula::eq(interp_term(f.terms[0]), interp_term(f.terms[1]));
    case Formula::Kind::Leq: return Formula::leq(interp_term(f.terms[0]), interp_term(f.terms[1]));
    case Formula::Kind::And: return Formula::conj(interpret(f.subs[0]), interpret(f.subs[1]));
    case Formula::Kind::Or: return Formula::disj(interpret(f.subs[0]), interpret(f.subs[1]));
    case Formula::Kind::Exists:
      // bound variables range over the unit interval on the group side
      return Formula::exists(f.var, Formula::conj(bounds_of(f.var), interpret(f.subs[0])));
    case Formula::Kind::BigVee: return Formula::bigvee(f.var, f.bound, interpret(f.subs[0]));
  }
  fail(Errc::InvariantViolation, "unhandled formula kind");
}

Sequent interpret(const Sequent& s) {
  return Sequent{interpret(s.premise), s.context, interpret(s.conclusion)};
}

Sequent guard(const Sequent& s) {
  Sequent out = s;
  for (const auto& v : s.context) out.premise = Formula::conj(std::move(out.premise), bounds_of(v));
  return out;
}

Report check_interpretation_soundness(const LPtr& g, const Sequent& s, const CheckOptions& opt) {
  Report rep;
  rep.check = "interpretation-soundness";
  rep.subject = g->name() + " :: " + to_string(s);
  rep.seed = opt.seed;
  try {
    const Report on_interval = check_sequent(Model::of(gamma(g)), s, opt);
    const Report on_group = check_sequent(Model::of(g), guard(interpret(s)), opt);
    rep.checked = on_interval.checked + on_group.checked;
    rep.mode = (on_interval.mode == "exhaustive" && on_group.mode == "exhaustive") ? "exhaustive"
                                                                                   : "sampled";
    rep.note = std::string("interval outcome ") + outcome_name(on_interval.outcome) +
               ", group outcome " + outcome_name(on_group.outcome);
    if (on_interval.outcome != on_group.outcome) {
      std::string detail = "interval: " + std::string(outcome_name(on_interval.outcome));
      if (on_interval.witness) detail += " (" + on_interval.witness->detail + ")";
      detail += "; group: " + std::string(outcome_name(on_group.outcome));
      if (on_group.witness) detail += " (" + on_group.witness->detail + ")";
      rep.fail_with("both sides agree", detail);
    }
  } catch (const Error& e) {
    rep.fail_with("evaluation error", e.what());
  }
  return rep;
}

std::vector<Sequent> mv_axiom_sequents() {
  const char* texts[] = {
      "tt |- [x,y,z] oplus(x,oplus(y,z)) = oplus(oplus(x,y),z)",
      "tt |- [x,y] oplus(x,y) = oplus(y,x)",
      "tt |- [x] oplus(x,0) = x",
      "tt |- [x] neg(neg(x)) = x",
      "tt |- [x] oplus(x,neg(0)) = neg(0)",
      "tt |- [x,y] oplus(neg(oplus(neg(x),y)),y) = oplus(neg(oplus(neg(y),x)),x)",
  };
  std::vector<Sequent> out;
  for (const char* t : texts) out.push_back(parse_sequent(t));
  return out;
}

std::vector<Sequent> lu_axiom_sequents(long long bigvee_bound) {
  const char* texts[] = {
      "tt |- [x,y,z] add(x,add(y,z)) = add(add(x,y),z)",
      "tt |- [x] add(x,0) = x",
      "tt |- [x] add(x,minus(x)) = 0",
      "tt |- [x,y] add(x,y) = add(y,x)",
      "tt |- [x] x <= x",
      "x <= y & y <= x |- [x,y] x = y",
      "x <= y & y <= z |- [x,y,z] x <= z",
      "tt |- [x,y] inf(x,y) <= x & inf(x,y) <= y",
      "z <= x & z <= y |- [x,y,z] z <= inf(x,y)",
      "tt |- [x,y] x <= sup(x,y) & y <= sup(x,y)",
      "x <= z & y <= z |- [x,y,z] sup(x,y) <= z",
      "x <= y |- [x,y,t] add(t,x) <= add(t,y)",
      "tt |- [] 0 <= u",
  };
  std::vector<Sequent> out;
  for (const char* t : texts) out.push_back(parse_sequent(t));
  out.push_back(parse_sequent("0 <= x |- [x] bigvee n<=" + std::to_string(bigvee_bound) +
                              ". x <= n"));
  return out;
}

std::vector<Sequent> interval_sequents() {
  std::vector<Sequent> out;
  for (const auto& s : mv_axiom_sequents()) out.push_back(guard(interpret(s)));
  return out;
}

}  // namespace mundici
