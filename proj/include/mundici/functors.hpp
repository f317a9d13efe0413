#pragma once

// The two functors of the MV / lattice-group equivalence and their natural
// isomorphisms.
//
//   gamma(G)  : unit interval [0, u] with x oplus y = inf(u, x+y), neg x = u-x
//   l_group(A): group of differences [p, q] of good sequences over A, with
//               [p,q] = [p',q'] iff p + q' = p' + q (cross sums)
//   phi_A     : A -> gamma(l_group(A)), a |-> [(a), ()]
//   psi_G     : G -> l_group(gamma(G)), a |-> [decompose(a+), decompose(a-)]
//               with inverse f([p,q]) = sum(p) - sum(q)

#include "mundici/good_sequence.hpp"
#include "mundici/lgroup.hpp"

namespace mundici {

MvPtr gamma(const LPtr& g);

// Restriction of a group hom to unit intervals. Verifies on spot/sampled
// interval elements that images stay inside [0, u']; throws
// ImageEscapesInterval otherwise (a non-unital or invalid hom).
MvHom gamma_hom(const LHom& h, const CheckOptions& opt = {});

LPtr l_group(const MvPtr& a);

// [p, q] |-> [map p, map q] componentwise.
LHom l_hom(const MvHom& f);

// Accessors for the composite carriers; throw SourceTargetMismatch when the
// argument was not built by the matching functor.
LPtr gamma_base(const MvPtr& interval_algebra);
MvPtr l_group_base(const LPtr& difference_group);

// Difference-pair encoding helpers.
Value make_pair_value(const GoodSequence& p, const GoodSequence& q);
GoodSequence pair_pos(const MvPtr& a, const Value& pair);
GoodSequence pair_neg(const MvPtr& a, const Value& pair);
std::string format_pair(const MvPtr& a, const Value& pair);  // "[p | q]"

// Greedy interval decomposition of b >= 0: b_i = inf(u, remainder).
// Throws NegativeElement when b is not >= 0. The result is a good sequence
// over `into` (an interval algebra over g; created fresh when null) whose
// components sum back to b.
GoodSequence good_decompose(const LPtr& g, const Value& b, MvPtr into = nullptr);

struct IsoWitness {
  std::string description;
  std::function<Value(const Value&)> forward;
  std::function<Value(const Value&)> backward;
  Report report;
};

// Verifies phi_A as an MV-isomorphism onto gamma(l_group(A)): hom laws,
// injectivity, order preservation both ways, and (finite carriers)
// surjectivity by enumerating difference pairs up to opt.max_len.
IsoWitness phi(const MvPtr& a, const CheckOptions& opt = {});

// Verifies psi_G against its inverse f: both composites are identities on
// the sampled elements, both maps are structure-preserving, and f sends the
// one-term unit sequence to u exactly.
IsoWitness psi(const LPtr& g, const CheckOptions& opt = {});

// Commuting squares of the isomorphisms with a hom.
Report check_phi_naturality(const MvHom& h, const CheckOptions& opt = {});
Report check_psi_naturality(const LHom& h, const CheckOptions& opt = {});

// Independent cross-check for chains: [p,q] |-> n*(sum p - sum q) is a
// unital group isomorphism l_group(chain n) -> (Z, n), verified exhaustively
// over difference pairs of length <= opt.max_len with plain rational sums.
Report check_chain_group_oracle(long long n, const CheckOptions& opt = {});

}  // namespace mundici
