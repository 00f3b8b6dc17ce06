#include "corrkit/sset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace corrkit {

CellId SimplicialSet::add_cell(int dim, std::vector<SimplexRef> faces, std::string label) {
  Cell c;
  c.dim = dim;
  c.faces = std::move(faces);
  c.label = std::move(label);
  cells_.push_back(std::move(c));
  return static_cast<CellId>(cells_.size() - 1);
}

int SimplicialSet::dim() const {
  int d = -1;
  for (const Cell& c : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<CellId> SimplicialSet::cells_of_dim(int d) const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cells_.size(); ++c)
    if (cells_[c].dim == d) out.push_back(c);
  return out;
}

int SimplicialSet::count_cells_of_dim(int d) const {
  return static_cast<int>(cells_of_dim(d).size());
}

// ---- standard objects ----------------------------------------------------

SsetPtr empty_sset() { return std::make_shared<SimplicialSet>(); }

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  // k-element subsets of {0..n}, lexicographic
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string subset_label(const std::vector<int>& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

// Builds Delta^n, boundary, or a horn: keep is called on each vertex subset.
template <typename Keep>
SsetPtr build_delta_family(int n, Keep keep) {
  auto X = std::make_shared<SimplicialSet>();
  std::map<std::vector<int>, CellId> id_of;
  for (int size = 1; size <= n + 1; ++size) {
    for (const auto& s : subsets_of_size(n, size)) {
      if (!keep(s)) continue;
      std::vector<SimplexRef> faces;
      if (size >= 2) {
        for (int i = 0; i < size; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          faces.push_back(SimplexRef{{}, id_of.at(f)});
        }
      }
      id_of[s] = X->add_cell(size - 1, std::move(faces), subset_label(s));
    }
  }
  return X;
}

}  // namespace

SsetPtr standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: n < 0");
  // memoized so repeated calls share one object (diagrams compare by pointer)
  static std::vector<SsetPtr> cache;
  if (n >= static_cast<int>(cache.size())) cache.resize(static_cast<size_t>(n) + 1);
  if (!cache[static_cast<size_t>(n)])
    cache[static_cast<size_t>(n)] =
        build_delta_family(n, [](const std::vector<int>&) { return true; });
  return cache[static_cast<size_t>(n)];
}

SsetPtr boundary(int n) {
  if (n < 0) throw std::invalid_argument("boundary: n < 0");
  return build_delta_family(
      n, [n](const std::vector<int>& s) { return static_cast<int>(s.size()) != n + 1; });
}

SsetPtr horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn: bad (n,k)");
  return build_delta_family(n, [n, k](const std::vector<int>& s) {
    if (static_cast<int>(s.size()) == n + 1) return false;
    if (static_cast<int>(s.size()) == n) {
      // the face opposite vertex k is omitted
      bool has_k = std::find(s.begin(), s.end(), k) != s.end();
      if (!has_k) return false;
    }
    return true;
  });
}

std::vector<int> standard_cell_vertices(int n, CellId c) {
  // cells are ordered by (size, lex); recover by counting
  CellId idx = c;
  for (int size = 1; size <= n + 1; ++size) {
    auto subs = subsets_of_size(n, size);
    if (idx < subs.size()) return subs[idx];
    idx -= static_cast<CellId>(subs.size());
  }
  throw std::invalid_argument("standard_cell_vertices: cell out of range");
}

CellId standard_cell_id(int n, const std::vector<int>& vertices) {
  CellId base = 0;
  int size = static_cast<int>(vertices.size());
  for (int s = 1; s < size; ++s) base += static_cast<CellId>(subsets_of_size(n, s).size());
  auto subs = subsets_of_size(n, size);
  auto it = std::lower_bound(subs.begin(), subs.end(), vertices);
  if (it == subs.end() || *it != vertices)
    throw std::invalid_argument("standard_cell_id: not a vertex subset");
  return base + static_cast<CellId>(it - subs.begin());
}

SimplexRef delta_simplex(int n, const std::vector<int>& vertices) {
  EpiMono em = factor(Monotone{vertices, n});
  return SimplexRef{word_of_epi(em.epi), standard_cell_id(n, em.mono.values)};
}

// ---- simplices -----------------------------------------------------------

int ref_dim(const SimplicialSet& X, const SimplexRef& r) {
  return X.cell(r.cell).dim + static_cast<int>(r.word.size());
}

SimplexRef act(const SimplicialSet& X, const SimplexRef& x, const Monotone& theta) {
  int n = ref_dim(X, x);
  if (theta.target != n) throw std::invalid_argument("act: operator/simplex dimension mismatch");
  Monotone f = compose(epi_of_word(x.word, n), theta);
  CellId c = x.cell;
  for (;;) {
    int cd = X.cell(c).dim;
    // largest value of [cd] missed by f
    std::vector<char> hit(static_cast<size_t>(cd) + 1, 0);
    for (int v : f.values) hit[static_cast<size_t>(v)] = 1;
    int a = -1;
    for (int v = cd; v >= 0; --v)
      if (!hit[static_cast<size_t>(v)]) {
        a = v;
        break;
      }
    if (a < 0) return SimplexRef{word_of_epi(f), c};
    const SimplexRef& st = X.cell(c).faces[static_cast<size_t>(a)];
    Monotone g;
    g.target = cd - 1;
    g.values.reserve(f.values.size());
    for (int v : f.values) g.values.push_back(v < a ? v : v - 1);
    f = compose(epi_of_word(st.word, cd - 1), g);
    c = st.cell;
  }
}

SimplexRef face_of(const SimplicialSet& X, const SimplexRef& x, int i) {
  return act(X, x, coface(i, ref_dim(X, x)));
}

SimplexRef degeneracy_of(const SimplicialSet& X, const SimplexRef& x, int i) {
  return act(X, x, codegeneracy(i, ref_dim(X, x)));
}

std::vector<SimplexRef> enumerate_simplices(const SimplicialSet& X, int n) {
  std::vector<SimplexRef> out;
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    int m = X.cell(c).dim;
    if (m > n) continue;
    for (const Monotone& e : all_epis(n, m)) out.push_back(SimplexRef{word_of_epi(e), c});
  }
  return out;
}

std::vector<SimplexRef> simplex_vertices(const SimplicialSet& X, const SimplexRef& x) {
  int n = ref_dim(X, x);
  std::vector<SimplexRef> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) out.push_back(act(X, x, Monotone{{j}, n}));
  return out;
}

// ---- validation ----------------------------------------------------------

namespace {

bool ref_structurally_valid(const SimplicialSet& X, const SimplexRef& r, int expect_dim,
                            std::string& why) {
  if (r.cell >= static_cast<CellId>(X.num_cells())) {
    why = "cell id out of range";
    return false;
  }
  int base = X.cell(r.cell).dim;
  if (!word_is_valid(r.word, base)) {
    why = "malformed degeneracy word";
    return false;
  }
  if (base + static_cast<int>(r.word.size()) != expect_dim) {
    why = "wrong dimension";
    return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_sset(const SimplicialSet& X) {
  ValidationReport rep;
  std::vector<char> structural_ok(static_cast<size_t>(X.num_cells()), 1);
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    const Cell& cell = X.cell(c);
    if (cell.dim < 0) {
      rep.issues.push_back("cell " + std::to_string(c) + ": negative dimension");
      structural_ok[c] = 0;
      continue;
    }
    size_t want = cell.dim == 0 ? 0 : static_cast<size_t>(cell.dim) + 1;
    if (cell.faces.size() != want) {
      rep.issues.push_back("cell " + std::to_string(c) + ": expected " + std::to_string(want) +
                           " faces, got " + std::to_string(cell.faces.size()));
      structural_ok[c] = 0;
      continue;
    }
    for (size_t i = 0; i < cell.faces.size(); ++i) {
      std::string why;
      if (!ref_structurally_valid(X, cell.faces[i], cell.dim - 1, why)) {
        rep.issues.push_back("cell " + std::to_string(c) + ", face " + std::to_string(i) + ": " +
                             why);
        structural_ok[c] = 0;
      }
    }
  }
  if (!rep.ok()) return rep;  // identities need sound structure to evaluate

  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    const Cell& cell = X.cell(c);
    if (cell.dim < 2) continue;
    for (int j = 1; j <= cell.dim; ++j) {
      for (int i = 0; i < j; ++i) {
        SimplexRef lhs = act(X, cell.faces[static_cast<size_t>(j)], coface(i, cell.dim - 1));
        SimplexRef rhs = act(X, cell.faces[static_cast<size_t>(i)], coface(j - 1, cell.dim - 1));
        if (!(lhs == rhs)) {
          rep.issues.push_back("cell " + std::to_string(c) + ": d_" + std::to_string(i) + " d_" +
                               std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                               std::to_string(i));
        }
      }
    }
  }
  return rep;
}

// ---- maps ----------------------------------------------------------------

SimplicialMap identity_map(SsetPtr X) {
  SimplicialMap f;
  f.source = X;
  f.target = X;
  for (CellId c = 0; c < static_cast<CellId>(X->num_cells()); ++c)
    f.assignment.push_back(SimplexRef{{}, c});
  return f;
}

SimplexRef apply(const SimplicialMap& f, const SimplexRef& x) {
  const SimplexRef& img = f.assignment[x.cell];
  if (x.word.empty()) return img;
  int n = ref_dim(*f.source, x);
  Monotone e = compose(epi_of_word(img.word, f.source->cell(x.cell).dim),
                       epi_of_word(x.word, n));
  return SimplexRef{word_of_epi(e), img.cell};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h;
  h.source = f.source;
  h.target = g.target;
  h.assignment.reserve(f.assignment.size());
  for (const SimplexRef& r : f.assignment) h.assignment.push_back(apply(g, r));
  return h;
}

ValidationReport validate_map(const SimplicialMap& f) {
  ValidationReport rep;
  const SimplicialSet& X = *f.source;
  const SimplicialSet& Y = *f.target;
  if (f.assignment.size() != static_cast<size_t>(X.num_cells())) {
    rep.issues.push_back("assignment size does not match source cell count");
    return rep;
  }
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    std::string why;
    if (!ref_structurally_valid(Y, f.assignment[c], X.cell(c).dim, why)) {
      rep.issues.push_back("cell " + std::to_string(c) + ": image " + why);
      return rep;
    }
  }
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    const Cell& cell = X.cell(c);
    for (int i = 0; i <= cell.dim && cell.dim >= 1; ++i) {
      SimplexRef lhs = apply(f, cell.faces[static_cast<size_t>(i)]);
      SimplexRef rhs = act(Y, f.assignment[c], coface(i, cell.dim));
      if (!(lhs == rhs))
        rep.issues.push_back("cell " + std::to_string(c) + ": face " + std::to_string(i) +
                             " not preserved");
    }
  }
  return rep;
}

bool same_map(const SimplicialMap& f, const SimplicialMap& g) {
  return f.assignment == g.assignment;
}

SimplicialMap terminal_map(SsetPtr X) {
  SimplicialMap f;
  f.source = X;
  f.target = standard_simplex(0);
  for (CellId c = 0; c < static_cast<CellId>(X->num_cells()); ++c) {
    int d = X->cell(c).dim;
    std::vector<int> zeros(static_cast<size_t>(d) + 1, 0);
    f.assignment.push_back(delta_simplex(0, zeros));
  }
  return f;
}

SimplicialMap delta_map(const Monotone& theta) {
  int m = theta.source_dim();
  SimplicialMap f;
  f.source = standard_simplex(m);
  f.target = standard_simplex(theta.target);
  for (CellId c = 0; c < static_cast<CellId>(f.source->num_cells()); ++c) {
    std::vector<int> verts = standard_cell_vertices(m, c);
    for (int& v : verts) v = theta(v);
    f.assignment.push_back(delta_simplex(theta.target, verts));
  }
  return f;
}

SimplicialMap classifying_map(SsetPtr A, const SimplexRef& sigma) {
  int n = ref_dim(*A, sigma);
  SimplicialMap f;
  f.source = standard_simplex(n);
  f.target = A;
  for (CellId c = 0; c < static_cast<CellId>(f.source->num_cells()); ++c) {
    std::vector<int> verts = standard_cell_vertices(n, c);
    f.assignment.push_back(act(*A, sigma, Monotone{verts, n}));
  }
  return f;
}

SimplicialMap sub_delta_inclusion(SsetPtr sub, int n) {
  SimplicialMap f;
  f.source = sub;
  f.target = standard_simplex(n);
  for (CellId c = 0; c < static_cast<CellId>(sub->num_cells()); ++c) {
    std::vector<SimplexRef> vs = simplex_vertices(*sub, SimplexRef{{}, c});
    std::vector<int> verts;
    for (const SimplexRef& v : vs) verts.push_back(static_cast<int>(v.cell));
    f.assignment.push_back(delta_simplex(n, verts));
  }
  return f;
}

IsoWitness is_iso(const SimplicialMap& f) {
  IsoWitness w;
  const SimplicialSet& X = *f.source;
  const SimplicialSet& Y = *f.target;
  int top = std::max(X.dim(), Y.dim());
  for (int d = 0; d <= top; ++d) {
    if (X.count_cells_of_dim(d) != Y.count_cells_of_dim(d)) {
      w.reason = "cell counts differ in dimension " + std::to_string(d);
      return w;
    }
  }
  std::vector<int> inv(static_cast<size_t>(Y.num_cells()), -1);
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    const SimplexRef& img = f.assignment[c];
    if (!img.nondegenerate()) {
      w.reason = "cell " + std::to_string(c) + " has degenerate image";
      return w;
    }
    if (inv[img.cell] != -1) {
      w.reason = "not injective on cells (target cell " + std::to_string(img.cell) + ")";
      return w;
    }
    inv[img.cell] = static_cast<int>(c);
  }
  SimplicialMap g;
  g.source = f.target;
  g.target = f.source;
  for (CellId c = 0; c < static_cast<CellId>(Y.num_cells()); ++c)
    g.assignment.push_back(SimplexRef{{}, static_cast<CellId>(inv[c])});
  ValidationReport rep = validate_map(g);
  if (!rep.ok()) {
    w.reason = "inverse assignment is not simplicial: " + rep.issues.front();
    return w;
  }
  w.is_iso = true;
  w.inverse = std::move(g);
  return w;
}

// ---- operator words ------------------------------------------------------

Monotone operator_word_to_monotone(const OperatorWord& w) {
  Monotone total = identity_mono(w.source_dim);
  int cur = w.source_dim;
  for (const OperatorSymbol& s : w.ops) {
    if (s.kind == OperatorSymbol::Face) {
      if (cur < 1 || s.index < 0 || s.index > cur)
        throw std::invalid_argument("malformed operator word: face index out of range");
      total = compose(total, coface(s.index, cur));
      --cur;
    } else {
      if (s.index < 0 || s.index > cur)
        throw std::invalid_argument("malformed operator word: degeneracy index out of range");
      total = compose(total, codegeneracy(s.index, cur));
      ++cur;
    }
  }
  return total;
}

OperatorWord normalize_word(const OperatorWord& w) {
  EpiMono em = factor(operator_word_to_monotone(w));
  OperatorWord out;
  out.source_dim = w.source_dim;
  // faces applied first, largest index first
  std::vector<int> image = em.mono.values;
  std::vector<char> in_image(static_cast<size_t>(em.mono.target) + 1, 0);
  for (int v : image) in_image[static_cast<size_t>(v)] = 1;
  for (int v = em.mono.target; v >= 0; --v)
    if (!in_image[static_cast<size_t>(v)]) out.ops.push_back({OperatorSymbol::Face, v});
  for (int r : epi_repeats(em.epi)) out.ops.push_back({OperatorSymbol::Degeneracy, r});
  return out;
}

}  // namespace corrkit
