#include "corrkit/mapsearch.hpp"

#include <algorithm>

namespace corrkit {

namespace {

// Backtracking over generators in dimension order.  constrain(cell, cand)
// may veto a candidate beyond face compatibility (used for over-base search).
template <typename Constrain>
std::vector<SimplicialMap> search_maps(SsetPtr X, SsetPtr Y, Constrain constrain,
                                       std::uint64_t budget) {
  std::vector<CellId> order;
  for (int d = 0; d <= X->dim(); ++d)
    for (CellId c : X->cells_of_dim(d)) order.push_back(c);

  // candidate pools per dimension
  std::vector<std::vector<SimplexRef>> pool(static_cast<size_t>(X->dim() + 1));
  for (int d = 0; d <= X->dim(); ++d) pool[static_cast<size_t>(d)] = enumerate_simplices(*Y, d);

  std::vector<SimplexRef> assignment(static_cast<size_t>(X->num_cells()));
  std::vector<SimplicialMap> out;
  std::uint64_t used = 0;

  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == order.size()) {
      SimplicialMap f;
      f.source = X;
      f.target = Y;
      f.assignment = assignment;
      out.push_back(std::move(f));
      return;
    }
    CellId c = order[pos];
    int d = X->cell(c).dim;
    for (const SimplexRef& cand : pool[static_cast<size_t>(d)]) {
      if (++used > budget) throw BudgetExceeded();
      if (!constrain(c, cand)) continue;
      bool ok = true;
      for (int i = 0; i <= d && d >= 1; ++i) {
        // image of the i-th face under the partial map (faces are lower dim,
        // hence already assigned)
        const SimplexRef& fr = X->cell(c).faces[static_cast<size_t>(i)];
        const SimplexRef& img = assignment[fr.cell];
        SimplexRef want;
        if (fr.word.empty()) {
          want = img;
        } else {
          Monotone e = compose(epi_of_word(img.word, X->cell(fr.cell).dim),
                               epi_of_word(fr.word, d - 1));
          want = SimplexRef{word_of_epi(e), img.cell};
        }
        if (!(act(*Y, cand, coface(i, d)) == want)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assignment[c] = cand;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<SimplicialMap> enumerate_maps(SsetPtr X, SsetPtr Y, std::uint64_t budget) {
  return search_maps(X, Y, [](CellId, const SimplexRef&) { return true; }, budget);
}

std::vector<SimplicialMap> enumerate_maps_over(const SimplicialMap& pX, const SimplicialMap& pY,
                                               std::uint64_t budget) {
  SsetPtr X = pX.source;
  SsetPtr Y = pY.source;
  auto over = [&](CellId c, const SimplexRef& cand) {
    return apply(pY, cand) == pX.assignment[c];
  };
  return search_maps(X, Y, over, budget);
}

std::vector<SimplicialMap> function_complex_level(SsetPtr X, SsetPtr Y, int n,
                                                  std::uint64_t budget) {
  ProductResult P = product(X, standard_simplex(n));
  return enumerate_maps(P.object, Y, budget);
}

}  // namespace corrkit
