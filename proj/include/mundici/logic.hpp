#pragma once

// Geometric fragment over the two algebraic signatures, with a text DSL:
//
//   terms     0 | u | x | neg(t) | oplus(t,t) | odot(t,t)
//               | add(t,t) | minus(t) | inf(t,t) | sup(t,t)
//   atoms     t = t  |  t <= t
//   formulas  tt | f & f | f \/ f | exists x. f | bigvee n<=N. f
//   sequents  f |- [x,y,...] f
//
// Inside bigvee the index identifier, used as a term, denotes the n-fold sum
// of the unit (n-fold oplus of neg 0 on MV carriers); the family stands for
// an unbounded disjunction, so exhausting the bound yields unknown, never
// false. Satisfaction is checked by enumeration or sampling; reports state
// validity over the supplied models, not provability.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mundici/lgroup.hpp"
#include "mundici/mv_algebra.hpp"

namespace mundici {

enum class Sig { Neutral, Mv, Lu };  // Neutral: only 0, =, <=, variables

struct Term {
  enum class Kind { Var, Zero, Unit, Neg, Oplus, Odot, Add, Minus, Inf, Sup };
  Kind kind = Kind::Zero;
  std::string var;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term zero();
  static Term unit();
  static Term apply(Kind k, std::vector<Term> args);
};

struct Formula {
  enum class Kind { True, Eq, Leq, And, Or, Exists, BigVee };
  Kind kind = Kind::True;
  std::vector<Term> terms;       // atoms: lhs, rhs
  std::vector<Formula> subs;     // And/Or: 2; Exists/BigVee: 1
  std::string var;               // Exists binder or BigVee index
  long long bound = 0;           // BigVee N

  static Formula truth();
  static Formula eq(Term l, Term r);
  static Formula leq(Term l, Term r);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula exists(std::string v, Formula f);
  static Formula bigvee(std::string v, long long n, Formula f);
};

struct Sequent {
  Formula premise;
  std::vector<std::string> context;
  Formula conclusion;
};

Sig join_sig(Sig a, Sig b);  // throws SignatureMismatch on Mv vs Lu
Sig signature_of(const Term& t);
Sig signature_of(const Formula& f);
Sig signature_of(const Sequent& s);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

Term parse_term(const std::string& text);
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);  // validates free vars within context

// A model is one carrier of either signature.
struct Model {
  MvPtr mv;
  LPtr lu;

  static Model of(MvPtr a) { return Model{std::move(a), nullptr}; }
  static Model of(LPtr g) { return Model{nullptr, std::move(g)}; }
  Sig sig() const { return mv ? Sig::Mv : Sig::Lu; }
  std::string name() const;
};

using Env = std::map<std::string, Value>;

enum class Tri { True, False, Unknown };
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);

Value eval_term(const Model& m, const Env& env, const Term& t);
Tri holds(const Model& m, const Env& env, const Formula& f, const CheckOptions& opt = {});

// Premise-true environments must make the conclusion true. Environments are
// enumerated on finite carriers and sampled otherwise; the report's note
// records that this is validity over the model, not provability.
Report check_sequent(const Model& m, const Sequent& s, const CheckOptions& opt = {});

// Structural interpretation of MV syntax in group syntax:
//   0 |-> 0,  neg t |-> u - t,  oplus(s,t) |-> inf(u, s+t),
//   odot expands through its definition; existential binders acquire the
//   interval bounds 0 <= y <= u.
Term interpret(const Term& t);
Formula interpret(const Formula& f);
Sequent interpret(const Sequent& s);

// Adds 0 <= x and x <= u to the premise for every context variable.
Sequent guard(const Sequent& s);

// Compares check_sequent(gamma(G), s) with check_sequent(G, guard(interpret(s))).
Report check_interpretation_soundness(const LPtr& g, const Sequent& s, const CheckOptions& opt = {});

// Built-in axiom families.
std::vector<Sequent> mv_axiom_sequents();        // the six MV axioms
std::vector<Sequent> lu_axiom_sequents(long long bigvee_bound = 0);  // the 14 group axioms
std::vector<Sequent> interval_sequents();        // guarded translations of the MV axioms

}  // namespace mundici
