#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corrkit/monotone.hpp"

namespace corrkit {

using CellId = std::uint32_t;

// Eilenberg-Zilber reference: any simplex is a (possibly empty) degeneracy
// word applied to a unique nondegenerate generator cell.
struct SimplexRef {
  std::vector<int> word;  // strictly decreasing degeneracy indices
  CellId cell = 0;

  bool nondegenerate() const { return word.empty(); }
  bool operator==(const SimplexRef&) const = default;
  bool operator<(const SimplexRef& o) const {
    if (cell != o.cell) return cell < o.cell;
    return word < o.word;
  }
};

struct Cell {
  int dim = 0;
  std::vector<SimplexRef> faces;  // d_0 .. d_dim, each of dimension dim-1
  std::string label;
};

// Finite simplicial set presented by nondegenerate generators with faces
// valued in formal degeneracies.  Immutable once built (builders return
// shared_ptr<const SimplicialSet>).
class SimplicialSet {
 public:
  CellId add_cell(int dim, std::vector<SimplexRef> faces, std::string label = "");

  int num_cells() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(CellId c) const { return cells_[c]; }
  int dim() const;  // -1 for the empty simplicial set
  std::vector<CellId> cells_of_dim(int d) const;
  int count_cells_of_dim(int d) const;

 private:
  std::vector<Cell> cells_;
};

using SsetPtr = std::shared_ptr<const SimplicialSet>;

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// ---- standard objects ----------------------------------------------------

SsetPtr empty_sset();
SsetPtr standard_simplex(int n);
SsetPtr boundary(int n);
SsetPtr horn(int n, int k);

// Cells of standard_simplex(n) (and of boundary/horn, which share the
// layout) are indexed by nonempty vertex subsets of [n].
std::vector<int> standard_cell_vertices(int n, CellId c);
CellId standard_cell_id(int n, const std::vector<int>& vertices);
// The simplex of Delta^n with the given weakly increasing vertex list.
SimplexRef delta_simplex(int n, const std::vector<int>& vertices);

// ---- simplices -----------------------------------------------------------

int ref_dim(const SimplicialSet& X, const SimplexRef& r);
// x . theta for theta : [m] -> [n], x of dimension n.
SimplexRef act(const SimplicialSet& X, const SimplexRef& x, const Monotone& theta);
SimplexRef face_of(const SimplicialSet& X, const SimplexRef& x, int i);
SimplexRef degeneracy_of(const SimplicialSet& X, const SimplexRef& x, int i);
// X_n as (word, cell) pairs; deterministic order.
std::vector<SimplexRef> enumerate_simplices(const SimplicialSet& X, int n);
// Vertices of a simplex, as 0-dimensional refs, in spine order.
std::vector<SimplexRef> simplex_vertices(const SimplicialSet& X, const SimplexRef& x);

ValidationReport validate_sset(const SimplicialSet& X);

// ---- maps ----------------------------------------------------------------

struct SimplicialMap {
  SsetPtr source;
  SsetPtr target;
  std::vector<SimplexRef> assignment;  // per source cell, equal dimension
};

SimplicialMap identity_map(SsetPtr X);
SimplexRef apply(const SimplicialMap& f, const SimplexRef& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
ValidationReport validate_map(const SimplicialMap& f);
// Structural equality on assignments (sources assumed to share cell layout).
bool same_map(const SimplicialMap& f, const SimplicialMap& g);

// The unique map X -> Delta^0.
SimplicialMap terminal_map(SsetPtr X);
// Delta^m -> Delta^n induced by a monotone map.
SimplicialMap delta_map(const Monotone& theta);
// Delta^n -> A classifying a simplex sigma of A (dimension n).
SimplicialMap classifying_map(SsetPtr A, const SimplexRef& sigma);
// Inclusion of horn/boundary cells into Delta^n (cells share subset layout).
SimplicialMap sub_delta_inclusion(SsetPtr sub, int n);

struct IsoWitness {
  bool is_iso = false;
  std::optional<SimplicialMap> inverse;
  std::string reason;  // set when not an iso
};
IsoWitness is_iso(const SimplicialMap& f);

// ---- operator words ------------------------------------------------------

struct OperatorSymbol {
  enum Kind { Face, Degeneracy } kind = Face;
  int index = 0;
  bool operator==(const OperatorSymbol&) const = default;
};

// A composable word of face/degeneracy symbols; ops[0] is applied first to a
// simplex of dimension source_dim.
struct OperatorWord {
  int source_dim = 0;
  std::vector<OperatorSymbol> ops;
  bool operator==(const OperatorWord&) const = default;
};

// The word as a map in the simplex category, [result_dim] -> [source_dim].
Monotone operator_word_to_monotone(const OperatorWord& w);
// Canonical form: faces (decreasing index) then degeneracies (increasing),
// the epi-mono factorization in the simplex category.
OperatorWord normalize_word(const OperatorWord& w);

}  // namespace corrkit
