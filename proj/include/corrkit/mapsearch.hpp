#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "corrkit/sset.hpp"
#include "corrkit/sset_colim.hpp"

namespace corrkit {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// All simplicial maps X -> Y, by backtracking over generator assignments.
// budget counts candidate face checks; throws BudgetExceeded.
std::vector<SimplicialMap> enumerate_maps(SsetPtr X, SsetPtr Y,
                                          std::uint64_t budget = kDefaultBudget);

// All maps g : source(pX) -> source(pY) with pY . g = pX.
std::vector<SimplicialMap> enumerate_maps_over(const SimplicialMap& pX, const SimplicialMap& pY,
                                               std::uint64_t budget = kDefaultBudget);

// Maps X x Delta^n -> Y; the n-simplices of the function complex.
std::vector<SimplicialMap> function_complex_level(SsetPtr X, SsetPtr Y, int n,
                                                  std::uint64_t budget = kDefaultBudget);

}  // namespace corrkit
