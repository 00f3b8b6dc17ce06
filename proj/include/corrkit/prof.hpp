#pragma once

#include <optional>
#include <tuple>

#include "corrkit/cat.hpp"

namespace corrkit {

// A profunctor src^op x tgt -> Set, as element tables with arrow actions.
struct Profunctor {
  CatPtr src, tgt;  // C, D
  struct Elem {
    int c = 0, d = 0;
    bool operator==(const Elem&) const = default;
  };
  std::vector<Elem> elems;
  std::map<std::pair<int, int>, std::vector<int>> at;  // (c, d) -> elem ids
  std::map<std::pair<int, int>, int> lact;  // (tgt-arrow g: d -> d', e with e.d = d) -> e'
  std::map<std::pair<int, int>, int> ract;  // (src-arrow f: c' -> c, e with e.c = c) -> e'

  int left(int g, int e) const { return lact.at({g, e}); }
  int right(int f, int e) const { return ract.at({f, e}); }
  std::vector<int> at_or_empty(int c, int d) const;
};

ValidationReport validate_prof(const Profunctor& u);
bool same_prof(const Profunctor& u, const Profunctor& v);

// A map of profunctors over fixed C, D: elementwise, action-equivariant.
struct ProfMap {
  std::vector<int> assignment;  // per elem of the source profunctor
};

ValidationReport validate_prof_map(const Profunctor& u, const Profunctor& v, const ProfMap& m);
bool prof_map_is_iso(const Profunctor& u, const Profunctor& v, const ProfMap& m);

// Companion of F : C -> D, with elements D(Fc, d).
struct CompanionResult {
  Profunctor prof;
  std::vector<int> arrow_of;                 // elem -> D-arrow
  std::map<std::pair<int, int>, int> elem_of;  // (c, D-arrow) -> elem
};
CompanionResult companion(const FunctorData& F);

// Hom profunctor of C: the companion of the identity.
CompanionResult hom_profunctor(CatPtr C);

// ---- collages -------------------------------------------------------------

struct CollageResult {
  CatPtr total;
  FunctorData proj;              // total -> chain_category(1)
  std::vector<int> c_arrow, d_arrow;  // embeddings of the C- and D-arrows
  std::vector<int> cross;             // per profunctor elem, its collage arrow
};
CollageResult collage(const Profunctor& u);

struct CollageDecomp {
  Profunctor u;
  CatPtr C, D;
  std::vector<int> c_obj, d_obj;   // new object -> old object
  std::vector<int> c_arr, d_arr;   // new arrow -> old arrow
  std::vector<int> elem_arrow;     // elem -> arrow of the input over 0 -> 1
};
// Reads a profunctor off a functor to [1].
CollageDecomp from_collage(const FunctorData& p);

// ---- tensor products ------------------------------------------------------

// v tensor_D u with the coend class map ((v-elem, u-elem) -> result elem).
struct TensorResult {
  Profunctor prof;
  std::map<std::pair<int, int>, int> class_of;
};

TensorResult tensor_coend(const Profunctor& v, const Profunctor& u);

// The route through collages: glue the two collages over D into a category
// over [2] (path classes give the new cross arrows), pull back along the
// outer edge, and read the profunctor off the resulting collage.
TensorResult tensor_geometric(const Profunctor& v, const Profunctor& u);

// Canonical comparison between two tensor computations of the same pair;
// nullopt if their class maps are inconsistent.
std::optional<ProfMap> tensor_comparison(const TensorResult& A, const TensorResult& B);

// ---- lax diagrams of profunctors ------------------------------------------

// Normal lax functor base -> Prof: identities carry hom profunctors, and the
// laxity mu is stored per composable pair, indexed by tensor coend classes.
struct LaxProfDiagram {
  CatPtr base;
  std::vector<CatPtr> vertex;     // per object
  std::vector<Profunctor> edge;   // per arrow
  std::map<std::pair<int, int>, std::vector<int>> mu;  // (g, f) -> per tensor class
};

ValidationReport validate_lax(const LaxProfDiagram& D);

// Fibers and over-arrow profunctors of a functor, with bookkeeping back into
// the source category.
struct ClassifyingCat {
  LaxProfDiagram diagram;
  std::vector<std::vector<int>> fiber_obj;   // per base object: fiber index -> object
  std::vector<std::vector<int>> elem_arrow;  // per base arrow: elem -> arrow
};
ClassifyingCat classifying_diagram_cat(const FunctorData& F);

// The big collage over the base: the double colimit of a normal lax diagram.
struct DcolimProf {
  CatPtr total;
  FunctorData proj;
  std::vector<std::pair<int, int>> obj;  // (base object, vertex object)
  std::map<std::pair<int, int>, int> obj_index;
  std::vector<std::pair<int, int>> arr;  // (base arrow, edge elem)
  std::map<std::pair<int, int>, int> arr_index;
};
DcolimProf dcolim_prof(const LaxProfDiagram& D);

struct RoundtripCat {
  bool iso = false;
  FunctorData comparison;  // dcolim of the classifying diagram -> source of F
  std::string reason;
};
RoundtripCat roundtrip_cat(const FunctorData& F);

// Gro(F) vs dcolim of the companion diagram F^*.
struct GroVsDcolim {
  bool iso = false;
  std::string reason;
};
GroVsDcolim gro_vs_dcolim(const CatDiagram& F);

}  // namespace corrkit
