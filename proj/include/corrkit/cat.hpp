#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "corrkit/sset.hpp"

namespace corrkit {

struct CatArrow {
  int src = 0, tgt = 0;
  std::string label;
};

// Finite category with an explicit composition table.
class FiniteCategory {
 public:
  int num_objects = 0;
  std::vector<CatArrow> arrows;
  std::vector<int> ids;                     // object -> identity arrow
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g.f on composable pairs

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool composable(int g, int f) const { return arrows[static_cast<size_t>(f)].tgt == arrows[static_cast<size_t>(g)].src; }
  int compose_arr(int g, int f) const;  // throws on non-composable pairs
  bool is_id(int a) const;
  std::vector<int> hom(int c, int d) const;
};

using CatPtr = std::shared_ptr<const FiniteCategory>;

ValidationReport validate_cat(const FiniteCategory& C);

CatPtr terminal_category();
// The poset 0 < 1 < ... < n; arrows are pairs (i, j) with i <= j, ordered lex.
CatPtr chain_category(int n);
int chain_arrow(int n, int i, int j);
// Free category on a finite graph; arrows are paths.  Throws on cycles.
CatPtr free_category(int num_objects, const std::vector<std::pair<int, int>>& edges);

// ---- functors -------------------------------------------------------------

struct FunctorData {
  CatPtr source, target;
  std::vector<int> obj, arr;
};

ValidationReport validate_functor(const FunctorData& F);
FunctorData identity_functor(CatPtr C);
FunctorData compose_functor(const FunctorData& G, const FunctorData& F);
bool same_functor(const FunctorData& F, const FunctorData& G);
bool functor_is_iso(const FunctorData& F);

// ---- nerves ---------------------------------------------------------------

// Nerve truncated at dimension up_to.  Nondegenerate n-cells are composable
// strings of non-identity arrows; vertex cells are the objects in order.
struct Nerve {
  SsetPtr object;
  std::vector<std::vector<int>> string_of;          // per cell; empty for vertices
  std::map<std::vector<int>, CellId> cell_of;       // strings of length >= 1
  CatPtr cat;
  int up_to = 0;

  // EZ form of an arbitrary composable string (identities allowed).
  SimplexRef ref_of_string(const std::vector<int>& s) const;
};

Nerve nerve_data(CatPtr C, int up_to);
SsetPtr nerve(CatPtr C, int up_to);
SimplicialMap nerve_map(const FunctorData& F, int up_to);

// ---- Cat-valued diagrams and the Grothendieck construction ---------------

struct CatDiagram {
  CatPtr base;
  std::vector<CatPtr> at;        // per object
  std::vector<FunctorData> on;   // per arrow, at[src] -> at[tgt]
};

// Checks strict functoriality: identities and all composites.
ValidationReport validate_cat_diagram(const CatDiagram& D);

struct GrothendieckResult {
  CatPtr total;
  FunctorData proj;  // total -> base
  std::vector<std::pair<int, int>> obj;  // (base object a, object of at[a])
  std::map<std::pair<int, int>, int> obj_index;
  // arrows are (f, x, alpha): x over src(f), alpha: F(f)(x) -> y in at[tgt f]
  std::vector<std::tuple<int, int, int>> arr;
  std::map<std::tuple<int, int, int>, int> arr_index;
};

GrothendieckResult grothendieck(const CatDiagram& F);

struct GroFibrationReport {
  bool verdict = false;
  std::vector<std::pair<int, int>> failures;  // (base arrow f, object x) with no cocartesian lift
};

// Cocartesian lift search per (arrow of the base, object over its source).
GroFibrationReport is_grothendieck_fibration(const FunctorData& p);

}  // namespace corrkit
