#include "corrkit/sset_colim.hpp"

#include <algorithm>
#include <stdexcept>

namespace corrkit {

// ---- products ------------------------------------------------------------

std::pair<std::vector<int>, std::pair<SimplexRef, SimplexRef>> pair_normalize(
    const SimplicialSet& X, const SimplicialSet& Y, const SimplexRef& a, const SimplexRef& b) {
  int n = ref_dim(X, a);
  if (ref_dim(Y, b) != n) throw std::invalid_argument("pair_normalize: dimension mismatch");
  std::vector<int> ra(a.word.rbegin(), a.word.rend());
  std::vector<int> rb(b.word.rbegin(), b.word.rend());
  std::vector<int> shared;
  std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(shared));
  if (shared.empty()) return {{}, {a, b}};
  Monotone e = epi_from_repeats(shared, n);
  int m = e.target;
  auto residual = [&](const SimplexRef& r, int cell_dim) {
    Monotone er = epi_of_word(r.word, n);
    Monotone out;
    out.target = cell_dim;
    out.values.assign(static_cast<size_t>(m) + 1, 0);
    for (int j = 0; j <= n; ++j) out.values[static_cast<size_t>(e(j))] = er(j);
    return SimplexRef{word_of_epi(out), r.cell};
  };
  std::vector<int> word(shared.rbegin(), shared.rend());
  return {word, {residual(a, X.cell(a.cell).dim), residual(b, Y.cell(b.cell).dim)}};
}

namespace {

bool repeats_disjoint(const SimplexRef& a, const SimplexRef& b) {
  for (int i : a.word)
    for (int j : b.word)
      if (i == j) return false;
  return true;
}

// Shared generator-construction for product and pullback; keep() filters
// admissible pairs of equal-dimensional simplices.
template <typename Keep>
void build_pair_object(SsetPtr X, SsetPtr Y, Keep keep, SsetPtr& object,
                       std::map<std::pair<SimplexRef, SimplexRef>, CellId>& index,
                       SimplicialMap& proj1, SimplicialMap& proj2) {
  auto P = std::make_shared<SimplicialSet>();
  proj1.assignment.clear();
  proj2.assignment.clear();
  int top = (X->dim() < 0 || Y->dim() < 0) ? -1 : X->dim() + Y->dim();
  for (int n = 0; n <= top; ++n) {
    auto xs = enumerate_simplices(*X, n);
    auto ys = enumerate_simplices(*Y, n);
    for (const SimplexRef& a : xs) {
      for (const SimplexRef& b : ys) {
        if (!repeats_disjoint(a, b)) continue;
        if (!keep(a, b)) continue;
        std::vector<SimplexRef> faces;
        if (n >= 1) {
          for (int i = 0; i <= n; ++i) {
            SimplexRef fa = face_of(*X, a, i);
            SimplexRef fb = face_of(*Y, b, i);
            auto [w, pr] = pair_normalize(*X, *Y, fa, fb);
            faces.push_back(SimplexRef{w, index.at(pr)});
          }
        }
        CellId id = P->add_cell(n, std::move(faces));
        index[{a, b}] = id;
        proj1.assignment.push_back(a);
        proj2.assignment.push_back(b);
      }
    }
  }
  object = P;
  proj1.source = object;
  proj2.source = object;
  proj1.target = X;
  proj2.target = Y;
}

}  // namespace

SimplexRef ProductResult::pair_ref(const SimplexRef& a, const SimplexRef& b) const {
  auto [w, pr] = pair_normalize(*left, *right, a, b);
  return SimplexRef{w, index.at(pr)};
}

ProductResult product(SsetPtr X, SsetPtr Y) {
  ProductResult r;
  r.left = X;
  r.right = Y;
  build_pair_object(X, Y, [](const SimplexRef&, const SimplexRef&) { return true; }, r.object,
                    r.index, r.proj1, r.proj2);
  return r;
}

SimplicialMap into_product(const ProductResult& P, const SimplicialMap& f,
                           const SimplicialMap& g) {
  SimplicialMap h;
  h.source = f.source;
  h.target = P.object;
  for (size_t c = 0; c < f.assignment.size(); ++c)
    h.assignment.push_back(P.pair_ref(f.assignment[c], g.assignment[c]));
  return h;
}

// ---- pullbacks -----------------------------------------------------------

SimplexRef PullbackResult::pair_ref(const SimplexRef& a, const SimplexRef& b) const {
  auto [w, pr] = pair_normalize(*f.source, *g.source, a, b);
  return SimplexRef{w, index.at(pr)};
}

std::optional<SimplicialMap> PullbackResult::mediate(const SimplicialMap& h,
                                                     const SimplicialMap& k) const {
  if (!same_map(compose(f, h), compose(g, k))) return std::nullopt;
  SimplicialMap m;
  m.source = h.source;
  m.target = object;
  for (size_t c = 0; c < h.assignment.size(); ++c)
    m.assignment.push_back(pair_ref(h.assignment[c], k.assignment[c]));
  return m;
}

PullbackResult pullback(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.target != g.target && !same_map(identity_map(f.target), identity_map(g.target)))
    throw std::invalid_argument("pullback: codomains differ");
  PullbackResult r;
  r.f = f;
  r.g = g;
  auto agree = [&](const SimplexRef& a, const SimplexRef& b) {
    return apply(f, a) == apply(g, b);
  };
  build_pair_object(f.source, g.source, agree, r.object, r.index, r.p1, r.p2);
  return r;
}

// ---- colimits ------------------------------------------------------------

ValidationReport validate_diagram(const SsetDiagram& d) {
  ValidationReport rep;
  for (size_t i = 0; i < d.arrows.size(); ++i) {
    const auto& a = d.arrows[i];
    if (a.src < 0 || a.src >= static_cast<int>(d.objects.size()) || a.tgt < 0 ||
        a.tgt >= static_cast<int>(d.objects.size())) {
      rep.issues.push_back("arrow " + std::to_string(i) + ": object index out of range");
      continue;
    }
    if (a.map.source != d.objects[static_cast<size_t>(a.src)] ||
        a.map.target != d.objects[static_cast<size_t>(a.tgt)])
      rep.issues.push_back("arrow " + std::to_string(i) + ": endpoints do not match its map");
    ValidationReport mr = validate_map(a.map);
    for (const std::string& s : mr.issues)
      rep.issues.push_back("arrow " + std::to_string(i) + ": " + s);
  }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[static_cast<size_t>(b)] = a;  // smaller index wins, deterministic
    else
      parent[static_cast<size_t>(a)] = b;
  }
};

}  // namespace

SimplicialMap ColimitResult::induce(const std::vector<SimplicialMap>& cocone) const {
  SimplicialMap out;
  out.source = object;
  out.target = cocone.empty() ? empty_sset() : cocone.front().target;
  for (CellId c = 0; c < static_cast<CellId>(object->num_cells()); ++c) {
    int n = object->cell(c).dim;
    // find the class this generator came from: its ez form is {∅, c}
    const Level& lv = levels[static_cast<size_t>(n)];
    int root = -1;
    for (const auto& [r, ref] : ez[static_cast<size_t>(n)]) {
      if (ref.word.empty() && ref.cell == c) {
        root = r;
        break;
      }
    }
    const auto& [obj, x] = lv.elems[static_cast<size_t>(root)];
    out.assignment.push_back(apply(cocone[static_cast<size_t>(obj)], x));
  }
  return out;
}

ColimitResult colimit(const SsetDiagram& d) {
  ColimitResult r;
  int top = -1;
  for (const SsetPtr& o : d.objects) top = std::max(top, o->dim());
  r.truncation = top;
  r.levels.resize(static_cast<size_t>(top + 1));
  r.ez.resize(static_cast<size_t>(top + 1));

  std::vector<UnionFind> uf;
  for (int n = 0; n <= top; ++n) {
    auto& lv = r.levels[static_cast<size_t>(n)];
    for (size_t j = 0; j < d.objects.size(); ++j) {
      for (const SimplexRef& x : enumerate_simplices(*d.objects[j], n)) {
        lv.elem_index[{static_cast<int>(j), x}] = static_cast<int>(lv.elems.size());
        lv.elems.push_back({static_cast<int>(j), x});
      }
    }
    uf.emplace_back(lv.elems.size());
    for (const auto& a : d.arrows) {
      for (const SimplexRef& x : enumerate_simplices(*d.objects[static_cast<size_t>(a.src)], n)) {
        int ia = lv.elem_index.at({a.src, x});
        int ib = lv.elem_index.at({a.tgt, apply(a.map, x)});
        uf[static_cast<size_t>(n)].unite(ia, ib);
      }
    }
  }
  // settle class roots
  for (int n = 0; n <= top; ++n) {
    auto& lv = r.levels[static_cast<size_t>(n)];
    lv.cls.resize(lv.elems.size());
    for (size_t i = 0; i < lv.elems.size(); ++i)
      lv.cls[i] = uf[static_cast<size_t>(n)].find(static_cast<int>(i));
  }

  auto class_of = [&](int n, int obj, const SimplexRef& x) {
    const auto& lv = r.levels[static_cast<size_t>(n)];
    return lv.cls[static_cast<size_t>(lv.elem_index.at({obj, x}))];
  };

  // degeneracy witnesses: root at dim n -> (i, root at dim n-1)
  std::vector<std::map<int, std::pair<int, int>>> degen(static_cast<size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    const auto& lower = r.levels[static_cast<size_t>(n - 1)];
    for (size_t e = 0; e < lower.elems.size(); ++e) {
      if (lower.cls[e] != static_cast<int>(e)) continue;  // roots only
      const auto& [obj, x] = lower.elems[e];
      for (int i = 0; i < n; ++i) {
        SimplexRef sx = degeneracy_of(*d.objects[static_cast<size_t>(obj)], x, i);
        int root = class_of(n, obj, sx);
        auto it = degen[static_cast<size_t>(n)].find(root);
        if (it == degen[static_cast<size_t>(n)].end())
          degen[static_cast<size_t>(n)][root] = {i, static_cast<int>(e)};
      }
    }
  }

  auto Q = std::make_shared<SimplicialSet>();
  // ez form of a class, memoized in r.ez
  auto ez_of = [&](auto&& self, int n, int root) -> SimplexRef {
    auto it = r.ez[static_cast<size_t>(n)].find(root);
    if (it != r.ez[static_cast<size_t>(n)].end()) return it->second;
    auto w = degen[static_cast<size_t>(n)].at(root);  // generators preregistered below
    SimplexRef inner = self(self, n - 1, w.second);
    Monotone e = compose(epi_of_word(inner.word, n - 1), codegeneracy(w.first, n - 1));
    SimplexRef out{word_of_epi(e), inner.cell};
    r.ez[static_cast<size_t>(n)][root] = out;
    return out;
  };

  for (int n = 0; n <= top; ++n) {
    const auto& lv = r.levels[static_cast<size_t>(n)];
    for (size_t e = 0; e < lv.elems.size(); ++e) {
      if (lv.cls[e] != static_cast<int>(e)) continue;
      if (degen[static_cast<size_t>(n)].count(static_cast<int>(e))) continue;
      std::vector<SimplexRef> faces;
      if (n >= 1) {
        const auto& [obj, x] = lv.elems[e];
        for (int i = 0; i <= n; ++i) {
          int froot = class_of(n - 1, obj, face_of(*d.objects[static_cast<size_t>(obj)], x, i));
          faces.push_back(ez_of(ez_of, n - 1, froot));
        }
      }
      CellId id = Q->add_cell(n, std::move(faces));
      r.ez[static_cast<size_t>(n)][static_cast<int>(e)] = SimplexRef{{}, id};
    }
  }
  r.object = Q;

  for (size_t j = 0; j < d.objects.size(); ++j) {
    SimplicialMap inj;
    inj.source = d.objects[j];
    inj.target = Q;
    for (CellId c = 0; c < static_cast<CellId>(d.objects[j]->num_cells()); ++c) {
      int n = d.objects[j]->cell(c).dim;
      int root = class_of(n, static_cast<int>(j), SimplexRef{{}, c});
      inj.assignment.push_back(ez_of(ez_of, n, root));
    }
    r.injections.push_back(std::move(inj));
  }
  return r;
}

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source != g.source && !same_map(identity_map(f.source), identity_map(g.source)))
    throw std::invalid_argument("pushout: domains differ");
  SsetDiagram d;
  d.objects = {f.source, f.target, g.target};
  d.arrows.push_back({0, 1, f});
  d.arrows.push_back({0, 2, g});
  PushoutResult r;
  r.colim = colimit(d);
  r.object = r.colim.object;
  r.inj1 = r.colim.injections[1];
  r.inj2 = r.colim.injections[2];
  return r;
}

PushoutResult disjoint_union(SsetPtr X, SsetPtr Y) {
  SsetDiagram d;
  d.objects = {X, Y};
  PushoutResult r;
  r.colim = colimit(d);
  r.object = r.colim.object;
  r.inj1 = r.colim.injections[0];
  r.inj2 = r.colim.injections[1];
  return r;
}

}  // namespace corrkit
