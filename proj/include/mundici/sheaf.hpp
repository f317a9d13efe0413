#pragma once

// Sheaves of algebras on finite Alexandrov spaces. Points carry a
// specialization preorder; the opens are the up-closed sets and every point
// has a least open neighborhood, its principal up-set. A sheaf is stored
// comonadically: one stalk per point plus a restriction hom for every
// specialization pair x <= y (the stalk at x is the value on the up-set of
// x, and up(y) is contained in up(x)). Sections over an open are the
// restriction-compatible families.

#include <map>
#include <utility>

#include "mundici/functors.hpp"

namespace mundici {

class FiniteSpace;
using SpacePtr = std::shared_ptr<const FiniteSpace>;

class FiniteSpace {
public:
  // leq[i][j] means point i specializes below j; must be a preorder.
  FiniteSpace(std::vector<std::string> points, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(points_.size()); }
  const std::string& point_name(int i) const { return points_[i]; }
  int point_index(const std::string& name) const;  // BadInput if absent
  bool leq(int x, int y) const { return leq_[x][y]; }

  bool is_open(const std::vector<int>& pts) const;      // up-closed, sorted-or-not
  std::vector<int> min_open(int x) const;               // principal up-set, sorted
  std::vector<std::vector<int>> opens() const;          // every open, each sorted
  std::vector<int> whole() const;                       // all points, sorted

  static SpacePtr point();
  static SpacePtr sierpinski();   // closed point c below generic point o
  static SpacePtr chain(int n);   // p0 <= p1 <= ... <= p_{n-1}
  static SpacePtr antichain(int n);

private:
  std::vector<std::string> points_;
  std::vector<std::vector<bool>> leq_;
};

// Monotone point map between spaces (= continuous for Alexandrov opens).
// Construction validates monotonicity; throws NotContinuous.
struct ContinuousMap {
  SpacePtr dom;
  SpacePtr cod;
  std::vector<int> map;
  std::string label;

  ContinuousMap(SpacePtr d, SpacePtr c, std::vector<int> m, std::string lbl = "");
  static ContinuousMap identity(const SpacePtr& s);
  static ContinuousMap constant(const SpacePtr& d, const SpacePtr& c, int point);
};

struct MvSheaf {
  SpacePtr space;
  std::vector<MvPtr> stalks;
  std::map<std::pair<int, int>, MvHom> restrictions;  // keyed (x, y) for x <= y, x != y

  const MvHom restriction(int x, int y) const;  // identity when x == y
};

struct LSheaf {
  SpacePtr space;
  std::vector<LPtr> stalks;
  std::map<std::pair<int, int>, LHom> restrictions;

  const LHom restriction(int x, int y) const;
};

MvSheaf make_mv_sheaf(SpacePtr space, std::vector<MvPtr> stalks,
                      std::map<std::pair<int, int>, MvHom> restrictions);
LSheaf make_l_sheaf(SpacePtr space, std::vector<LPtr> stalks,
                    std::map<std::pair<int, int>, LHom> restrictions);

// Compatible families over an open (throws NotOpen otherwise). Elements are
// tuples indexed by the open's points in ascending order. Over a principal
// up-set the projection to the base point is an isomorphism onto the stalk.
// The empty open yields the one-element terminal structure.
MvPtr sections(const MvSheaf& f, const std::vector<int>& open);
// Section-level groups are plain unital groups: they carry no strong-unit
// certificate (unit_bound is nullopt); strongness is a stalk-level check.
LPtr sections(const LSheaf& f, const std::vector<int>& open);

// Stalkwise functor application; restrictions map through gamma_hom / l_hom.
MvSheaf gamma_sheaf(const LSheaf& f, const CheckOptions& opt = {});
LSheaf l_sheaf(const MvSheaf& f);

MvSheaf inverse_image(const ContinuousMap& f, const MvSheaf& g);
LSheaf inverse_image(const ContinuousMap& f, const LSheaf& g);

// Structure validation: every restriction is a hom, restrictions compose
// functorially, every stalk passes its axiom check (including the strong
// unit stalkwise for group sheaves).
Report validate_sheaf(const MvSheaf& f, const CheckOptions& opt = {});
Report validate_sheaf(const LSheaf& f, const CheckOptions& opt = {});

// Stalkwise roundtrips: phi isomorphisms onto gamma_sheaf(l_sheaf(F)) for MV
// sheaves, psi for group sheaves, plus commutation with every restriction.
Report check_sheaf_roundtrip(const MvSheaf& f, const CheckOptions& opt = {});
Report check_sheaf_roundtrip(const LSheaf& f, const CheckOptions& opt = {});

// Inverse image commutes with both functors along f, stalk by stalk
// (including restriction squares); on one-point spaces this degenerates to
// the classical equivalence.
Report check_sheaf_naturality(const ContinuousMap& f, const MvSheaf& g, const CheckOptions& opt = {});
Report check_sheaf_naturality(const ContinuousMap& f, const LSheaf& g, const CheckOptions& opt = {});

// Observational comparison of sections(gamma_sheaf(F), U) with
// gamma(sections(F, U)) on every open; recorded, not asserted.
Report compare_section_interval(const LSheaf& f, const CheckOptions& opt = {});

}  // namespace mundici
