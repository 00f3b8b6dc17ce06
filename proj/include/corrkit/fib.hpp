#pragma once

#include <optional>

#include "corrkit/mapsearch.hpp"

namespace corrkit {

// An inner horn lifting problem, absolute (p empty) or relative to a base
// n-simplex of the target of p.
struct HornProblem {
  int n = 2, k = 1;
  SimplicialMap horn_map;  // horn(n, k) -> X
  std::optional<SimplicialMap> p;
  SimplexRef base_simplex;
};

// All n-simplices of X solving the problem; degenerate fillers included.
std::vector<SimplexRef> horn_fillers(const HornProblem& pr);

struct FibrationReport {
  bool verdict = false;
  int min_n = 2, max_n = 2;             // range of horn dimensions checked
  std::vector<HornProblem> failures;    // problems with no filler
  bool budget_exhausted = false;
};

// Checks every inner horn map into X for 2 <= n <= max_n (default dim+2).
FibrationReport is_quasi_category(SsetPtr X, int max_n = -1,
                                  std::uint64_t budget = kDefaultBudget);

// Checks every relative inner horn problem for p up to max_n.
FibrationReport is_inner_fibration(const SimplicialMap& p, int max_n = -1,
                                   std::uint64_t budget = kDefaultBudget);

struct FiberwiseResult {
  bool inner_fibration = false;   // the direct check on p
  bool fibers_pass = false;       // every fiber over a nondegenerate simplex
  bool agreement = false;
  FibrationReport direct;
};

// The fiberwise criterion: p is an inner fibration iff all its fibers are.
FiberwiseResult fiberwise_criterion(const SimplicialMap& p, int max_n = -1,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace corrkit
