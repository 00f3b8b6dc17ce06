#pragma once

#include <cstdint>

#include "corrkit/corr.hpp"
#include "corrkit/prof.hpp"

namespace corrkit {

// Seed-deterministic random instances.  Identical seed + config always gives
// the identical value; everything generated passes its validator.
struct GenConfig {
  std::uint64_t seed = 0;
  int max_dim = 3;  // simplicial dimension bound, kept small on purpose
  int max_cells = 25;
  int max_objects = 8;
  int max_arrows = 40;
  std::string strategy = "mixed";  // categories: "poset" | "free" | "mixed"

  GenConfig with_seed(std::uint64_t s) const {
    GenConfig c = *this;
    c.seed = s;
    return c;
  }
};

// Random simplicial set built by gluing standard simplices along faces.
SsetPtr gen_sset(const GenConfig& cfg);

// Random X -> Delta^n, fibers chosen during the build so the vertex labeling
// is monotone by construction.
SimplicialMap gen_map_over(const GenConfig& cfg, int n);

// Random finite poset or free category (per cfg.strategy).
CatPtr gen_category(const GenConfig& cfg);

// Random functor into a generated poset (arrow images are forced there).
FunctorData gen_functor(const GenConfig& cfg);

// Random strict diagram of posets over chain_category(chain_len).
CatDiagram gen_cat_diagram(const GenConfig& cfg, int chain_len);

// Random profunctor between the given categories: a closed monotone relation
// when both are posets, otherwise empty.
Profunctor gen_profunctor(const GenConfig& cfg, CatPtr C, CatPtr D);

// Composable pair (v, u) with a shared middle category, mixing the relation
// and companion strategies.
std::pair<Profunctor, Profunctor> gen_prof_pair(const GenConfig& cfg);

}  // namespace corrkit
