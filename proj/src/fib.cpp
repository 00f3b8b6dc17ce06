#include "corrkit/fib.hpp"

#include "corrkit/corr.hpp"

namespace corrkit {

namespace {

// Cell of horn(n, k) carrying the face opposite vertex i (i != k).
std::vector<CellId> horn_face_cells(int n, int k) {
  SsetPtr h = horn(n, k);
  std::vector<CellId> out(static_cast<size_t>(n) + 1, 0);
  for (CellId c : h->cells_of_dim(n - 1)) {
    std::vector<char> present(static_cast<size_t>(n) + 1, 0);
    for (const SimplexRef& v : simplex_vertices(*h, SimplexRef{{}, c}))
      present[v.cell] = 1;
    for (int i = 0; i <= n; ++i)
      if (!present[static_cast<size_t>(i)]) out[static_cast<size_t>(i)] = c;
  }
  return out;
}

}  // namespace

std::vector<SimplexRef> horn_fillers(const HornProblem& pr) {
  SsetPtr X = pr.horn_map.target;
  std::vector<CellId> fc = horn_face_cells(pr.n, pr.k);
  std::vector<SimplexRef> out;
  for (const SimplexRef& z : enumerate_simplices(*X, pr.n)) {
    bool ok = true;
    for (int i = 0; i <= pr.n && ok; ++i) {
      if (i == pr.k) continue;
      if (!(face_of(*X, z, i) ==
            apply(pr.horn_map, SimplexRef{{}, fc[static_cast<size_t>(i)]})))
        ok = false;
    }
    if (ok && pr.p && !(apply(*pr.p, z) == pr.base_simplex)) ok = false;
    if (ok) out.push_back(z);
  }
  return out;
}

FibrationReport is_quasi_category(SsetPtr X, int max_n, std::uint64_t budget) {
  FibrationReport rep;
  rep.max_n = max_n >= 2 ? max_n : X->dim() + 2;
  for (int n = 2; n <= rep.max_n && !rep.budget_exhausted; ++n)
    for (int k = 1; k <= n - 1 && !rep.budget_exhausted; ++k) {
      std::vector<SimplicialMap> horns;
      try {
        horns = enumerate_maps(horn(n, k), X, budget);
      } catch (const BudgetExceeded&) {
        rep.budget_exhausted = true;
        break;
      }
      for (SimplicialMap& h : horns) {
        HornProblem pr{n, k, std::move(h), std::nullopt, SimplexRef{}};
        if (horn_fillers(pr).empty()) rep.failures.push_back(std::move(pr));
      }
    }
  rep.verdict = rep.failures.empty() && !rep.budget_exhausted;
  return rep;
}

FibrationReport is_inner_fibration(const SimplicialMap& p, int max_n,
                                   std::uint64_t budget) {
  FibrationReport rep;
  SsetPtr X = p.source;
  const SimplicialSet& A = *p.target;
  rep.max_n = max_n >= 2 ? max_n : X->dim() + 2;
  for (int n = 2; n <= rep.max_n && !rep.budget_exhausted; ++n)
    for (int k = 1; k <= n - 1 && !rep.budget_exhausted; ++k) {
      std::vector<CellId> fc = horn_face_cells(n, k);
      std::vector<SimplicialMap> horns;
      try {
        horns = enumerate_maps(horn(n, k), X, budget);
      } catch (const BudgetExceeded&) {
        rep.budget_exhausted = true;
        break;
      }
      for (const SimplicialMap& h : horns) {
        SimplicialMap q = compose(p, h);
        for (const SimplexRef& sigma : enumerate_simplices(A, n)) {
          bool compat = true;
          for (int i = 0; i <= n && compat; ++i) {
            if (i == k) continue;
            if (!(face_of(A, sigma, i) ==
                  apply(q, SimplexRef{{}, fc[static_cast<size_t>(i)]})))
              compat = false;
          }
          if (!compat) continue;
          HornProblem pr{n, k, h, p, sigma};
          if (horn_fillers(pr).empty()) rep.failures.push_back(std::move(pr));
        }
      }
    }
  rep.verdict = rep.failures.empty() && !rep.budget_exhausted;
  return rep;
}

FiberwiseResult fiberwise_criterion(const SimplicialMap& p, int max_n,
                                    std::uint64_t budget) {
  FiberwiseResult out;
  out.direct = is_inner_fibration(p, max_n, budget);
  out.inner_fibration = out.direct.verdict;
  out.fibers_pass = true;
  const SimplicialSet& A = *p.target;
  for (int d = 0; d <= A.dim(); ++d)
    for (CellId c : A.cells_of_dim(d)) {
      FiberResult F = fiber(p, SimplexRef{{}, c});
      FibrationReport fr = is_inner_fibration(F.corr.structure, max_n, budget);
      if (fr.budget_exhausted) out.direct.budget_exhausted = true;
      if (!fr.verdict) out.fibers_pass = false;
    }
  out.agreement = out.inner_fibration == out.fibers_pass;
  return out;
}

}  // namespace corrkit
