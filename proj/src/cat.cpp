#include "corrkit/cat.hpp"

#include <algorithm>
#include <stdexcept>

namespace corrkit {

int FiniteCategory::compose_arr(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end()) throw std::invalid_argument("compose_arr: pair not composable");
  return it->second;
}

bool FiniteCategory::is_id(int a) const {
  int o = arrows[static_cast<size_t>(a)].src;
  return ids[static_cast<size_t>(o)] == a;
}

std::vector<int> FiniteCategory::hom(int c, int d) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows[static_cast<size_t>(a)].src == c && arrows[static_cast<size_t>(a)].tgt == d)
      out.push_back(a);
  return out;
}

ValidationReport validate_cat(const FiniteCategory& C) {
  ValidationReport rep;
  if (static_cast<int>(C.ids.size()) != C.num_objects)
    rep.issues.push_back("category: identity table size mismatch");
  for (int a = 0; a < C.num_arrows(); ++a) {
    const CatArrow& ar = C.arrows[static_cast<size_t>(a)];
    if (ar.src < 0 || ar.src >= C.num_objects || ar.tgt < 0 || ar.tgt >= C.num_objects)
      rep.issues.push_back("arrow " + std::to_string(a) + ": endpoint out of range");
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < C.num_objects; ++o) {
    int i = C.ids[static_cast<size_t>(o)];
    if (i < 0 || i >= C.num_arrows() || C.arrows[static_cast<size_t>(i)].src != o ||
        C.arrows[static_cast<size_t>(i)].tgt != o)
      rep.issues.push_back("object " + std::to_string(o) + ": bad identity arrow");
  }
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f) {
      auto it = C.comp.find({g, f});
      if (C.composable(g, f)) {
        if (it == C.comp.end()) {
          rep.issues.push_back("composition missing for (" + std::to_string(g) + "," +
                               std::to_string(f) + ")");
          continue;
        }
        const CatArrow& gf = C.arrows[static_cast<size_t>(it->second)];
        if (gf.src != C.arrows[static_cast<size_t>(f)].src ||
            gf.tgt != C.arrows[static_cast<size_t>(g)].tgt)
          rep.issues.push_back("composite endpoints wrong for (" + std::to_string(g) + "," +
                               std::to_string(f) + ")");
      } else if (it != C.comp.end()) {
        rep.issues.push_back("composition defined on non-composable pair");
      }
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < C.num_arrows(); ++f) {
    const CatArrow& ar = C.arrows[static_cast<size_t>(f)];
    if (C.compose_arr(f, C.ids[static_cast<size_t>(ar.src)]) != f ||
        C.compose_arr(C.ids[static_cast<size_t>(ar.tgt)], f) != f)
      rep.issues.push_back("unit law fails at arrow " + std::to_string(f));
  }
  for (int h = 0; h < C.num_arrows(); ++h)
    for (int g = 0; g < C.num_arrows(); ++g) {
      if (!C.composable(h, g)) continue;
      for (int f = 0; f < C.num_arrows(); ++f) {
        if (!C.composable(g, f)) continue;
        if (C.compose_arr(C.compose_arr(h, g), f) != C.compose_arr(h, C.compose_arr(g, f)))
          rep.issues.push_back("associativity fails at (" + std::to_string(h) + "," +
                               std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  return rep;
}

CatPtr terminal_category() { return chain_category(0); }

CatPtr chain_category(int n) {
  // memoized so repeated calls share one object (diagrams compare by pointer)
  static std::vector<CatPtr> cache;
  if (n < static_cast<int>(cache.size()) && cache[static_cast<size_t>(n)])
    return cache[static_cast<size_t>(n)];
  auto C = std::make_shared<FiniteCategory>();
  C->num_objects = n + 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      C->arrows.push_back({i, j, std::to_string(i) + "<=" + std::to_string(j)});
  auto idx = [n](int i, int j) {
    int base = 0;
    for (int t = 0; t < i; ++t) base += n + 1 - t;
    return base + (j - i);
  };
  for (int i = 0; i <= n; ++i) C->ids.push_back(idx(i, i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) C->comp[{idx(j, k), idx(i, j)}] = idx(i, k);
  if (n >= static_cast<int>(cache.size())) cache.resize(static_cast<size_t>(n) + 1);
  cache[static_cast<size_t>(n)] = C;
  return C;
}

int chain_arrow(int n, int i, int j) {
  int base = 0;
  for (int t = 0; t < i; ++t) base += n + 1 - t;
  return base + (j - i);
}

CatPtr free_category(int num_objects, const std::vector<std::pair<int, int>>& edges) {
  auto C = std::make_shared<FiniteCategory>();
  C->num_objects = num_objects;
  // paths by BFS on length; identities are the empty paths
  std::map<std::vector<int>, int> id_of_path;
  std::vector<std::pair<std::vector<int>, std::pair<int, int>>> paths;  // (edge seq, (src,tgt))
  for (int o = 0; o < num_objects; ++o) {
    C->ids.push_back(static_cast<int>(paths.size()));
    paths.push_back({{-1 - o}, {o, o}});
    C->arrows.push_back({o, o, "id"});
  }
  std::vector<std::vector<int>> frontier;
  std::vector<std::pair<int, int>> fends;
  for (size_t e = 0; e < edges.size(); ++e) {
    frontier.push_back({static_cast<int>(e)});
    fends.push_back(edges[e]);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    std::vector<std::pair<int, int>> nends;
    for (size_t t = 0; t < frontier.size(); ++t) {
      // acyclic paths use at most num_objects - 1 edges
      if (frontier[t].size() >= static_cast<size_t>(num_objects))
        throw std::invalid_argument("free_category: graph has a cycle");
      id_of_path[frontier[t]] = static_cast<int>(paths.size());
      paths.push_back({frontier[t], fends[t]});
      C->arrows.push_back({fends[t].first, fends[t].second, ""});
      for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == fends[t].second) {
          std::vector<int> p = frontier[t];
          p.push_back(static_cast<int>(e));
          next.push_back(std::move(p));
          nends.push_back({fends[t].first, edges[e].second});
        }
    }
    frontier = std::move(next);
    fends = std::move(nends);
  }
  for (size_t g = 0; g < paths.size(); ++g)
    for (size_t f = 0; f < paths.size(); ++f) {
      if (paths[f].second.second != paths[g].second.first) continue;
      if (C->is_id(static_cast<int>(g))) {
        C->comp[{static_cast<int>(g), static_cast<int>(f)}] = static_cast<int>(f);
      } else if (C->is_id(static_cast<int>(f))) {
        C->comp[{static_cast<int>(g), static_cast<int>(f)}] = static_cast<int>(g);
      } else {
        std::vector<int> cat = paths[f].first;
        cat.insert(cat.end(), paths[g].first.begin(), paths[g].first.end());
        C->comp[{static_cast<int>(g), static_cast<int>(f)}] = id_of_path.at(cat);
      }
    }
  return C;
}

// ---- functors -------------------------------------------------------------

ValidationReport validate_functor(const FunctorData& F) {
  ValidationReport rep;
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  if (static_cast<int>(F.obj.size()) != C.num_objects ||
      static_cast<int>(F.arr.size()) != C.num_arrows()) {
    rep.issues.push_back("functor: table size mismatch");
    return rep;
  }
  for (int a = 0; a < C.num_arrows(); ++a) {
    const CatArrow& ar = C.arrows[static_cast<size_t>(a)];
    int fa = F.arr[static_cast<size_t>(a)];
    if (fa < 0 || fa >= D.num_arrows()) {
      rep.issues.push_back("functor: arrow image out of range");
      return rep;
    }
    if (D.arrows[static_cast<size_t>(fa)].src != F.obj[static_cast<size_t>(ar.src)] ||
        D.arrows[static_cast<size_t>(fa)].tgt != F.obj[static_cast<size_t>(ar.tgt)])
      rep.issues.push_back("functor: endpoints not preserved at arrow " + std::to_string(a));
  }
  for (int o = 0; o < C.num_objects; ++o)
    if (F.arr[static_cast<size_t>(C.ids[static_cast<size_t>(o)])] !=
        D.ids[static_cast<size_t>(F.obj[static_cast<size_t>(o)])])
      rep.issues.push_back("functor: identity not preserved at object " + std::to_string(o));
  if (!rep.ok()) return rep;  // composite checks assume endpoints are right
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.composable(g, f) &&
          F.arr[static_cast<size_t>(C.compose_arr(g, f))] !=
              D.compose_arr(F.arr[static_cast<size_t>(g)], F.arr[static_cast<size_t>(f)]))
        rep.issues.push_back("functor: composition not preserved at (" + std::to_string(g) +
                             "," + std::to_string(f) + ")");
  return rep;
}

FunctorData identity_functor(CatPtr C) {
  FunctorData F;
  F.source = F.target = C;
  for (int o = 0; o < C->num_objects; ++o) F.obj.push_back(o);
  for (int a = 0; a < C->num_arrows(); ++a) F.arr.push_back(a);
  return F;
}

FunctorData compose_functor(const FunctorData& G, const FunctorData& F) {
  FunctorData H;
  H.source = F.source;
  H.target = G.target;
  for (int o : F.obj) H.obj.push_back(G.obj[static_cast<size_t>(o)]);
  for (int a : F.arr) H.arr.push_back(G.arr[static_cast<size_t>(a)]);
  return H;
}

bool same_functor(const FunctorData& F, const FunctorData& G) {
  return F.obj == G.obj && F.arr == G.arr;
}

bool functor_is_iso(const FunctorData& F) {
  std::vector<int> o = F.obj, a = F.arr;
  std::sort(o.begin(), o.end());
  std::sort(a.begin(), a.end());
  for (int i = 0; i < static_cast<int>(o.size()); ++i)
    if (o[static_cast<size_t>(i)] != i) return false;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[static_cast<size_t>(i)] != i) return false;
  return F.target->num_objects == static_cast<int>(o.size()) &&
         F.target->num_arrows() == static_cast<int>(a.size());
}

// ---- nerves ---------------------------------------------------------------

SimplexRef Nerve::ref_of_string(const std::vector<int>& s) const {
  std::vector<int> reduced;
  std::vector<int> evals{0};
  int m = 0;
  for (int a : s) {
    if (!cat->is_id(a)) {
      reduced.push_back(a);
      ++m;
    }
    evals.push_back(m);
  }
  Monotone e{evals, m};
  CellId cell;
  if (reduced.empty()) {
    int o = s.empty() ? 0 : cat->arrows[static_cast<size_t>(s.front())].src;
    cell = static_cast<CellId>(o);
  } else {
    cell = cell_of.at(reduced);
  }
  return SimplexRef{word_of_epi(e), cell};
}

Nerve nerve_data(CatPtr C, int up_to) {
  Nerve N;
  N.cat = C;
  N.up_to = up_to;
  auto X = std::make_shared<SimplicialSet>();
  for (int o = 0; o < C->num_objects; ++o) {
    X->add_cell(0, {}, "ob" + std::to_string(o));
    N.string_of.push_back({});
  }
  std::vector<std::vector<int>> level;
  for (int a = 0; a < C->num_arrows(); ++a)
    if (!C->is_id(a)) level.push_back({a});
  for (int n = 1; n <= up_to && !level.empty(); ++n) {
    for (const std::vector<int>& s : level) {
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t;
        if (i == 0) {
          t.assign(s.begin() + 1, s.end());
        } else if (i == n) {
          t.assign(s.begin(), s.end() - 1);
        } else {
          t.assign(s.begin(), s.end());
          t[static_cast<size_t>(i - 1)] = C->compose_arr(s[static_cast<size_t>(i)],
                                                         s[static_cast<size_t>(i - 1)]);
          t.erase(t.begin() + i);
        }
        if (n == 1) {
          int o = i == 0 ? C->arrows[static_cast<size_t>(s[0])].tgt
                         : C->arrows[static_cast<size_t>(s[0])].src;
          faces.push_back(SimplexRef{{}, static_cast<CellId>(o)});
        } else {
          faces.push_back(N.ref_of_string(t));
        }
      }
      CellId c = X->add_cell(n, std::move(faces));
      N.cell_of[s] = c;
      N.string_of.push_back(s);
    }
    if (n == up_to) break;
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& s : level)
      for (int a = 0; a < C->num_arrows(); ++a)
        if (!C->is_id(a) &&
            C->arrows[static_cast<size_t>(a)].src == C->arrows[static_cast<size_t>(s.back())].tgt) {
          std::vector<int> t = s;
          t.push_back(a);
          next.push_back(std::move(t));
        }
    level = std::move(next);
    // faces of the next level reference this level's cells, so N.object must
    // not be finalized yet; ref_of_string above only needs cell_of
  }
  N.object = X;
  return N;
}

SsetPtr nerve(CatPtr C, int up_to) { return nerve_data(C, up_to).object; }

SimplicialMap nerve_map(const FunctorData& F, int up_to) {
  Nerve NS = nerve_data(F.source, up_to);
  Nerve NT = nerve_data(F.target, up_to);
  SimplicialMap out;
  out.source = NS.object;
  out.target = NT.object;
  for (CellId c = 0; c < static_cast<CellId>(NS.object->num_cells()); ++c) {
    if (NS.object->cell(c).dim == 0) {
      out.assignment.push_back(SimplexRef{{}, static_cast<CellId>(F.obj[c])});
      continue;
    }
    std::vector<int> img;
    for (int a : NS.string_of[c]) img.push_back(F.arr[static_cast<size_t>(a)]);
    out.assignment.push_back(NT.ref_of_string(img));
  }
  return out;
}

// ---- Grothendieck ---------------------------------------------------------

ValidationReport validate_cat_diagram(const CatDiagram& D) {
  ValidationReport rep = validate_cat(*D.base);
  if (static_cast<int>(D.at.size()) != D.base->num_objects ||
      static_cast<int>(D.on.size()) != D.base->num_arrows()) {
    rep.issues.push_back("cat diagram: table size mismatch");
    return rep;
  }
  for (int a = 0; a < D.base->num_arrows(); ++a) {
    const FunctorData& F = D.on[static_cast<size_t>(a)];
    if (F.source != D.at[static_cast<size_t>(D.base->arrows[static_cast<size_t>(a)].src)] ||
        F.target != D.at[static_cast<size_t>(D.base->arrows[static_cast<size_t>(a)].tgt)])
      rep.issues.push_back("cat diagram: endpoints wrong at arrow " + std::to_string(a));
    ValidationReport fr = validate_functor(F);
    rep.issues.insert(rep.issues.end(), fr.issues.begin(), fr.issues.end());
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < D.base->num_objects; ++o)
    if (!same_functor(D.on[static_cast<size_t>(D.base->ids[static_cast<size_t>(o)])],
                      identity_functor(D.at[static_cast<size_t>(o)])))
      rep.issues.push_back("cat diagram: identity not sent to identity functor");
  for (int g = 0; g < D.base->num_arrows(); ++g)
    for (int f = 0; f < D.base->num_arrows(); ++f)
      if (D.base->composable(g, f) &&
          !same_functor(D.on[static_cast<size_t>(D.base->compose_arr(g, f))],
                        compose_functor(D.on[static_cast<size_t>(g)], D.on[static_cast<size_t>(f)])))
        rep.issues.push_back("cat diagram: strict functoriality fails at (" + std::to_string(g) +
                             "," + std::to_string(f) + ")");
  return rep;
}

GrothendieckResult grothendieck(const CatDiagram& F) {
  GrothendieckResult R;
  auto T = std::make_shared<FiniteCategory>();
  const FiniteCategory& A = *F.base;
  for (int a = 0; a < A.num_objects; ++a)
    for (int x = 0; x < F.at[static_cast<size_t>(a)]->num_objects; ++x) {
      R.obj_index[{a, x}] = static_cast<int>(R.obj.size());
      R.obj.push_back({a, x});
    }
  T->num_objects = static_cast<int>(R.obj.size());
  for (int f = 0; f < A.num_arrows(); ++f) {
    const CatArrow& af = A.arrows[static_cast<size_t>(f)];
    const FiniteCategory& Fb = *F.at[static_cast<size_t>(af.tgt)];
    const FunctorData& Ff = F.on[static_cast<size_t>(f)];
    for (int x = 0; x < F.at[static_cast<size_t>(af.src)]->num_objects; ++x)
      for (int al = 0; al < Fb.num_arrows(); ++al) {
        if (Fb.arrows[static_cast<size_t>(al)].src != Ff.obj[static_cast<size_t>(x)]) continue;
        R.arr_index[{f, x, al}] = static_cast<int>(R.arr.size());
        R.arr.push_back({f, x, al});
        T->arrows.push_back({R.obj_index.at({af.src, x}),
                             R.obj_index.at({af.tgt, Fb.arrows[static_cast<size_t>(al)].tgt}),
                             ""});
      }
  }
  for (const auto& [a, x] : R.obj) {
    int ida = A.ids[static_cast<size_t>(a)];
    int idx = F.at[static_cast<size_t>(a)]->ids[static_cast<size_t>(x)];
    T->ids.push_back(R.arr_index.at({ida, x, idx}));
  }
  // (g, beta) . (f, alpha) = (gf, beta . F(g)(alpha))
  for (size_t jg = 0; jg < R.arr.size(); ++jg) {
    const auto& [g, y0, be] = R.arr[jg];
    const CatArrow& ag = A.arrows[static_cast<size_t>(g)];
    const FiniteCategory& Fc = *F.at[static_cast<size_t>(ag.tgt)];
    const FunctorData& Fg = F.on[static_cast<size_t>(g)];
    for (size_t jf = 0; jf < R.arr.size(); ++jf) {
      const auto& [f, x, al] = R.arr[jf];
      const CatArrow& af = A.arrows[static_cast<size_t>(f)];
      const FiniteCategory& Fb = *F.at[static_cast<size_t>(af.tgt)];
      if (af.tgt != ag.src || Fb.arrows[static_cast<size_t>(al)].tgt != y0) continue;
      int gf = A.compose_arr(g, f);
      int comp = Fc.compose_arr(be, Fg.arr[static_cast<size_t>(al)]);
      T->comp[{static_cast<int>(jg), static_cast<int>(jf)}] = R.arr_index.at({gf, x, comp});
    }
  }
  R.total = T;
  R.proj.source = T;
  R.proj.target = F.base;
  for (const auto& [a, x] : R.obj) {
    (void)x;
    R.proj.obj.push_back(a);
  }
  for (const auto& [f, x, al] : R.arr) {
    (void)x;
    (void)al;
    R.proj.arr.push_back(f);
  }
  return R;
}

GroFibrationReport is_grothendieck_fibration(const FunctorData& p) {
  GroFibrationReport rep;
  const FiniteCategory& X = *p.source;
  const FiniteCategory& A = *p.target;
  for (int f = 0; f < A.num_arrows(); ++f)
    for (int x = 0; x < X.num_objects; ++x) {
      if (p.obj[static_cast<size_t>(x)] != A.arrows[static_cast<size_t>(f)].src) continue;
      bool found = false;
      for (int l = 0; l < X.num_arrows() && !found; ++l) {
        if (X.arrows[static_cast<size_t>(l)].src != x || p.arr[static_cast<size_t>(l)] != f)
          continue;
        // cocartesian: every h out of x over g.f factors uniquely through l over g
        bool cocart = true;
        for (int h = 0; h < X.num_arrows() && cocart; ++h) {
          if (X.arrows[static_cast<size_t>(h)].src != x) continue;
          for (int g = 0; g < A.num_arrows() && cocart; ++g) {
            if (!A.composable(g, f) || A.compose_arr(g, f) != p.arr[static_cast<size_t>(h)])
              continue;
            int count = 0;
            for (int h2 = 0; h2 < X.num_arrows(); ++h2)
              if (X.arrows[static_cast<size_t>(h2)].src == X.arrows[static_cast<size_t>(l)].tgt &&
                  p.arr[static_cast<size_t>(h2)] == g && X.composable(h2, l) &&
                  X.compose_arr(h2, l) == h)
                ++count;
            if (count != 1) cocart = false;
          }
        }
        if (cocart) found = true;
      }
      if (!found) rep.failures.push_back({f, x});
    }
  rep.verdict = rep.failures.empty();
  return rep;
}

}  // namespace corrkit
