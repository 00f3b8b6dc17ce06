#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "corrkit/sset.hpp"

namespace corrkit {

// ---- products ------------------------------------------------------------

struct ProductResult {
  SsetPtr object;
  SimplicialMap proj1, proj2;
  // normalized nondegenerate simplex pair -> generator of the product
  std::map<std::pair<SimplexRef, SimplexRef>, CellId> index;
  SsetPtr left, right;

  // The simplex of the product with the given components (equal dimension).
  SimplexRef pair_ref(const SimplexRef& a, const SimplexRef& b) const;
};

ProductResult product(SsetPtr X, SsetPtr Y);

// The map (f,g) : Z -> X x Y.
SimplicialMap into_product(const ProductResult& P, const SimplicialMap& f,
                           const SimplicialMap& g);

// Shared Eilenberg-Zilber normalization for simplex pairs: splits off the
// common degeneracy word.  Returns (word, residual pair of refs).
std::pair<std::vector<int>, std::pair<SimplexRef, SimplexRef>> pair_normalize(
    const SimplicialSet& X, const SimplicialSet& Y, const SimplexRef& a, const SimplexRef& b);

// ---- pullbacks -----------------------------------------------------------

struct PullbackResult {
  SsetPtr object;
  SimplicialMap p1, p2;  // to source(f), source(g)
  std::map<std::pair<SimplexRef, SimplexRef>, CellId> index;
  SimplicialMap f, g;

  SimplexRef pair_ref(const SimplexRef& a, const SimplexRef& b) const;
  // Mediating map for a cone (h,k); nullopt if the cone does not commute.
  std::optional<SimplicialMap> mediate(const SimplicialMap& h, const SimplicialMap& k) const;
};

PullbackResult pullback(const SimplicialMap& f, const SimplicialMap& g);

// ---- colimits ------------------------------------------------------------

struct SsetDiagram {
  std::vector<SsetPtr> objects;
  struct Arrow {
    int src = 0, tgt = 0;
    SimplicialMap map;
  };
  std::vector<Arrow> arrows;
};

ValidationReport validate_diagram(const SsetDiagram& d);

class ColimitResult {
 public:
  SsetPtr object;
  std::vector<SimplicialMap> injections;  // per diagram object
  int truncation = 0;                     // dimensionwise bound used

  // The map out of the colimit induced by a cocone (one map per object).
  SimplicialMap induce(const std::vector<SimplicialMap>& cocone) const;

  // internal: per dimension, class data (exposed for induce and debugging)
  struct Level {
    std::vector<std::pair<int, SimplexRef>> elems;  // (object, simplex)
    std::vector<int> cls;                           // element -> class root
    std::map<std::pair<int, SimplexRef>, int> elem_index;
  };
  std::vector<Level> levels;
  // per dimension: class root -> EZ form in the colimit object
  std::vector<std::map<int, SimplexRef>> ez;
};

ColimitResult colimit(const SsetDiagram& d);

struct PushoutResult {
  SsetPtr object;
  SimplicialMap inj1, inj2;  // from target(f), target(g)
  ColimitResult colim;
};

// Pushout of target(f) <- C -> target(g); f and g share their source.
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);

// Disjoint union, as the colimit of the arrowless two-object diagram.
PushoutResult disjoint_union(SsetPtr X, SsetPtr Y);

}  // namespace corrkit
