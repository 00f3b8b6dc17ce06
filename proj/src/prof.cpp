#include "corrkit/prof.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace corrkit {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[static_cast<size_t>(a)] != a) a = p[static_cast<size_t>(a)] = p[static_cast<size_t>(p[static_cast<size_t>(a)])];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    p[static_cast<size_t>(b)] = a;  // smaller index wins: deterministic reps
  }
};

}  // namespace

std::vector<int> Profunctor::at_or_empty(int c, int d) const {
  auto it = at.find({c, d});
  return it == at.end() ? std::vector<int>{} : it->second;
}

ValidationReport validate_prof(const Profunctor& u) {
  ValidationReport rep;
  const FiniteCategory& C = *u.src;
  const FiniteCategory& D = *u.tgt;
  for (size_t e = 0; e < u.elems.size(); ++e) {
    const auto& el = u.elems[e];
    if (el.c < 0 || el.c >= C.num_objects || el.d < 0 || el.d >= D.num_objects) {
      rep.issues.push_back("elem " + std::to_string(e) + ": object out of range");
      return rep;
    }
    const auto& lst = u.at_or_empty(el.c, el.d);
    if (std::find(lst.begin(), lst.end(), static_cast<int>(e)) == lst.end())
      rep.issues.push_back("elem " + std::to_string(e) + ": missing from its (c,d) bucket");
  }
  auto check_action = [&](bool left) {
    const FiniteCategory& K = left ? D : C;
    const auto& table = left ? u.lact : u.ract;
    for (int a = 0; a < K.num_arrows(); ++a)
      for (size_t e = 0; e < u.elems.size(); ++e) {
        bool applies = left ? (u.elems[e].d == K.arrows[static_cast<size_t>(a)].src)
                            : (u.elems[e].c == K.arrows[static_cast<size_t>(a)].tgt);
        auto it = table.find({a, static_cast<int>(e)});
        if (!applies) {
          if (it != table.end()) rep.issues.push_back("action on non-applicable pair");
          continue;
        }
        if (it == table.end()) {
          rep.issues.push_back("missing action entry");
          continue;
        }
        const auto& r = u.elems[static_cast<size_t>(it->second)];
        int wc = left ? u.elems[e].c : K.arrows[static_cast<size_t>(a)].src;
        int wd = left ? K.arrows[static_cast<size_t>(a)].tgt : u.elems[e].d;
        if (r.c != wc || r.d != wd) rep.issues.push_back("action lands in the wrong set");
      }
  };
  check_action(true);
  check_action(false);
  if (!rep.ok()) return rep;
  for (size_t e = 0; e < u.elems.size(); ++e) {
    int i = static_cast<int>(e);
    if (u.left(D.ids[static_cast<size_t>(u.elems[e].d)], i) != i ||
        u.right(C.ids[static_cast<size_t>(u.elems[e].c)], i) != i)
      rep.issues.push_back("unit action not trivial at elem " + std::to_string(e));
  }
  for (int g2 = 0; g2 < D.num_arrows(); ++g2)
    for (int g1 = 0; g1 < D.num_arrows(); ++g1) {
      if (!D.composable(g2, g1)) continue;
      for (size_t e = 0; e < u.elems.size(); ++e)
        if (u.elems[e].d == D.arrows[static_cast<size_t>(g1)].src &&
            u.left(D.compose_arr(g2, g1), static_cast<int>(e)) !=
                u.left(g2, u.left(g1, static_cast<int>(e))))
          rep.issues.push_back("left action not functorial");
    }
  for (int f2 = 0; f2 < C.num_arrows(); ++f2)
    for (int f1 = 0; f1 < C.num_arrows(); ++f1) {
      if (!C.composable(f1, f2)) continue;  // x.(f1 f2) = (x.f1).f2
      for (size_t e = 0; e < u.elems.size(); ++e)
        if (u.elems[e].c == C.arrows[static_cast<size_t>(f1)].tgt &&
            u.right(C.compose_arr(f1, f2), static_cast<int>(e)) !=
                u.right(f2, u.right(f1, static_cast<int>(e))))
          rep.issues.push_back("right action not functorial");
    }
  for (int g = 0; g < D.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      for (size_t e = 0; e < u.elems.size(); ++e)
        if (u.elems[e].d == D.arrows[static_cast<size_t>(g)].src &&
            u.elems[e].c == C.arrows[static_cast<size_t>(f)].tgt &&
            u.left(g, u.right(f, static_cast<int>(e))) !=
                u.right(f, u.left(g, static_cast<int>(e))))
          rep.issues.push_back("actions do not commute");
  return rep;
}

bool same_prof(const Profunctor& u, const Profunctor& v) {
  auto key = [](const Profunctor& p) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : p.elems) es.push_back({e.c, e.d});
    return std::make_tuple(es, p.at, p.lact, p.ract);
  };
  return key(u) == key(v);
}

ValidationReport validate_prof_map(const Profunctor& u, const Profunctor& v, const ProfMap& m) {
  ValidationReport rep;
  if (m.assignment.size() != u.elems.size()) {
    rep.issues.push_back("prof map: size mismatch");
    return rep;
  }
  for (size_t e = 0; e < u.elems.size(); ++e) {
    int t = m.assignment[e];
    if (t < 0 || t >= static_cast<int>(v.elems.size()) ||
        !(v.elems[static_cast<size_t>(t)] == u.elems[e])) {
      rep.issues.push_back("prof map: elem " + std::to_string(e) + " lands outside its set");
      return rep;
    }
  }
  for (const auto& [key, r] : u.lact)
    if (v.left(key.first, m.assignment[static_cast<size_t>(key.second)]) !=
        m.assignment[static_cast<size_t>(r)])
      rep.issues.push_back("prof map: not left-equivariant");
  for (const auto& [key, r] : u.ract)
    if (v.right(key.first, m.assignment[static_cast<size_t>(key.second)]) !=
        m.assignment[static_cast<size_t>(r)])
      rep.issues.push_back("prof map: not right-equivariant");
  return rep;
}

bool prof_map_is_iso(const Profunctor& u, const Profunctor& v, const ProfMap& m) {
  if (!validate_prof_map(u, v, m).ok()) return false;
  if (u.elems.size() != v.elems.size()) return false;
  std::vector<int> seen(v.elems.size(), 0);
  for (int t : m.assignment) seen[static_cast<size_t>(t)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

CompanionResult companion(const FunctorData& F) {
  CompanionResult R;
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  R.prof.src = F.source;
  R.prof.tgt = F.target;
  for (int c = 0; c < C.num_objects; ++c)
    for (int d = 0; d < D.num_objects; ++d)
      for (int g = 0; g < D.num_arrows(); ++g) {
        if (D.arrows[static_cast<size_t>(g)].src != F.obj[static_cast<size_t>(c)] ||
            D.arrows[static_cast<size_t>(g)].tgt != d)
          continue;
        int e = static_cast<int>(R.prof.elems.size());
        R.prof.elems.push_back({c, d});
        R.prof.at[{c, d}].push_back(e);
        R.arrow_of.push_back(g);
        R.elem_of[{c, g}] = e;
      }
  for (int h = 0; h < D.num_arrows(); ++h)
    for (size_t e = 0; e < R.prof.elems.size(); ++e)
      if (R.prof.elems[e].d == D.arrows[static_cast<size_t>(h)].src)
        R.prof.lact[{h, static_cast<int>(e)}] =
            R.elem_of.at({R.prof.elems[e].c, D.compose_arr(h, R.arrow_of[e])});
  for (int f = 0; f < C.num_arrows(); ++f)
    for (size_t e = 0; e < R.prof.elems.size(); ++e)
      if (R.prof.elems[e].c == C.arrows[static_cast<size_t>(f)].tgt)
        R.prof.ract[{f, static_cast<int>(e)}] =
            R.elem_of.at({C.arrows[static_cast<size_t>(f)].src,
                          D.compose_arr(R.arrow_of[e], F.arr[static_cast<size_t>(f)])});
  return R;
}

CompanionResult hom_profunctor(CatPtr C) { return companion(identity_functor(C)); }

// ---- collages -------------------------------------------------------------

CollageResult collage(const Profunctor& u) {
  CollageResult R;
  const FiniteCategory& C = *u.src;
  const FiniteCategory& D = *u.tgt;
  auto T = std::make_shared<FiniteCategory>();
  int nc = C.num_objects;
  T->num_objects = nc + D.num_objects;
  for (int a = 0; a < C.num_arrows(); ++a) {
    R.c_arrow.push_back(T->num_arrows());
    T->arrows.push_back(C.arrows[static_cast<size_t>(a)]);
  }
  for (int a = 0; a < D.num_arrows(); ++a) {
    R.d_arrow.push_back(T->num_arrows());
    T->arrows.push_back({D.arrows[static_cast<size_t>(a)].src + nc,
                         D.arrows[static_cast<size_t>(a)].tgt + nc,
                         D.arrows[static_cast<size_t>(a)].label});
  }
  for (size_t e = 0; e < u.elems.size(); ++e) {
    R.cross.push_back(T->num_arrows());
    T->arrows.push_back({u.elems[e].c, u.elems[e].d + nc, "x" + std::to_string(e)});
  }
  for (int o = 0; o < nc; ++o) T->ids.push_back(R.c_arrow[static_cast<size_t>(C.ids[static_cast<size_t>(o)])]);
  for (int o = 0; o < D.num_objects; ++o)
    T->ids.push_back(R.d_arrow[static_cast<size_t>(D.ids[static_cast<size_t>(o)])]);
  for (const auto& [key, r] : C.comp)
    T->comp[{R.c_arrow[static_cast<size_t>(key.first)], R.c_arrow[static_cast<size_t>(key.second)]}] =
        R.c_arrow[static_cast<size_t>(r)];
  for (const auto& [key, r] : D.comp)
    T->comp[{R.d_arrow[static_cast<size_t>(key.first)], R.d_arrow[static_cast<size_t>(key.second)]}] =
        R.d_arrow[static_cast<size_t>(r)];
  for (const auto& [key, r] : u.ract)  // cross . C-arrow
    T->comp[{R.cross[static_cast<size_t>(key.second)], R.c_arrow[static_cast<size_t>(key.first)]}] =
        R.cross[static_cast<size_t>(r)];
  for (const auto& [key, r] : u.lact)  // D-arrow . cross
    T->comp[{R.d_arrow[static_cast<size_t>(key.first)], R.cross[static_cast<size_t>(key.second)]}] =
        R.cross[static_cast<size_t>(r)];
  R.total = T;
  R.proj.source = T;
  R.proj.target = chain_category(1);
  for (int o = 0; o < T->num_objects; ++o) R.proj.obj.push_back(o < nc ? 0 : 1);
  R.proj.arr.assign(static_cast<size_t>(T->num_arrows()), chain_arrow(1, 0, 1));
  for (int a : R.c_arrow) R.proj.arr[static_cast<size_t>(a)] = chain_arrow(1, 0, 0);
  for (int a : R.d_arrow) R.proj.arr[static_cast<size_t>(a)] = chain_arrow(1, 1, 1);
  return R;
}

CollageDecomp from_collage(const FunctorData& p) {
  const FiniteCategory& U = *p.source;
  if (p.target->num_objects != 2)
    throw std::invalid_argument("from_collage: target is not the arrow category");
  CollageDecomp R;
  std::vector<int> obj_new(static_cast<size_t>(U.num_objects), -1);
  for (int o = 0; o < U.num_objects; ++o) {
    if (p.obj[static_cast<size_t>(o)] == 0) {
      obj_new[static_cast<size_t>(o)] = static_cast<int>(R.c_obj.size());
      R.c_obj.push_back(o);
    } else {
      obj_new[static_cast<size_t>(o)] = static_cast<int>(R.d_obj.size());
      R.d_obj.push_back(o);
    }
  }
  auto build_part = [&](int side, std::vector<int>& part_obj, std::vector<int>& part_arr) {
    auto K = std::make_shared<FiniteCategory>();
    K->num_objects = static_cast<int>(part_obj.size());
    std::vector<int> arr_new(static_cast<size_t>(U.num_arrows()), -1);
    int want = side == 0 ? chain_arrow(1, 0, 0) : chain_arrow(1, 1, 1);
    for (int a = 0; a < U.num_arrows(); ++a)
      if (p.arr[static_cast<size_t>(a)] == want) {
        arr_new[static_cast<size_t>(a)] = static_cast<int>(part_arr.size());
        part_arr.push_back(a);
        K->arrows.push_back({obj_new[static_cast<size_t>(U.arrows[static_cast<size_t>(a)].src)],
                             obj_new[static_cast<size_t>(U.arrows[static_cast<size_t>(a)].tgt)],
                             U.arrows[static_cast<size_t>(a)].label});
      }
    for (int o : part_obj) K->ids.push_back(arr_new[static_cast<size_t>(U.ids[static_cast<size_t>(o)])]);
    for (int g : part_arr)
      for (int f : part_arr)
        if (U.composable(g, f))
          K->comp[{arr_new[static_cast<size_t>(g)], arr_new[static_cast<size_t>(f)]}] =
              arr_new[static_cast<size_t>(U.compose_arr(g, f))];
    return K;
  };
  R.C = build_part(0, R.c_obj, R.c_arr);
  R.D = build_part(1, R.d_obj, R.d_arr);
  R.u.src = R.C;
  R.u.tgt = R.D;
  int cross_arr = chain_arrow(1, 0, 1);
  std::vector<int> elem_new(static_cast<size_t>(U.num_arrows()), -1);
  for (int a = 0; a < U.num_arrows(); ++a)
    if (p.arr[static_cast<size_t>(a)] == cross_arr) {
      int e = static_cast<int>(R.u.elems.size());
      elem_new[static_cast<size_t>(a)] = e;
      int c = obj_new[static_cast<size_t>(U.arrows[static_cast<size_t>(a)].src)];
      int d = obj_new[static_cast<size_t>(U.arrows[static_cast<size_t>(a)].tgt)];
      R.u.elems.push_back({c, d});
      R.u.at[{c, d}].push_back(e);
      R.elem_arrow.push_back(a);
    }
  for (size_t gi = 0; gi < R.d_arr.size(); ++gi)
    for (size_t e = 0; e < R.elem_arrow.size(); ++e)
      if (U.composable(R.d_arr[gi], R.elem_arrow[e]))
        R.u.lact[{static_cast<int>(gi), static_cast<int>(e)}] =
            elem_new[static_cast<size_t>(U.compose_arr(R.d_arr[gi], R.elem_arrow[e]))];
  for (size_t fi = 0; fi < R.c_arr.size(); ++fi)
    for (size_t e = 0; e < R.elem_arrow.size(); ++e)
      if (U.composable(R.elem_arrow[e], R.c_arr[fi]))
        R.u.ract[{static_cast<int>(fi), static_cast<int>(e)}] =
            elem_new[static_cast<size_t>(U.compose_arr(R.elem_arrow[e], R.c_arr[fi]))];
  return R;
}

// ---- tensor products ------------------------------------------------------

namespace {

// Pairs (v-elem, u-elem) over a shared middle object, with the coend
// union-find; shared by both tensor routes.
struct CoendPairs {
  std::vector<std::pair<int, int>> pairs;  // (iv, iu)
  std::map<std::pair<int, int>, int> pair_index;
  std::vector<int> root_of;                // pair -> class id
  std::vector<int> rep_of;                 // class -> representative pair
};

CoendPairs coend_pairs(const Profunctor& v, const Profunctor& u) {
  CoendPairs P;
  for (size_t iv = 0; iv < v.elems.size(); ++iv)
    for (size_t iu = 0; iu < u.elems.size(); ++iu)
      if (u.elems[iu].d == v.elems[iv].c) {
        P.pair_index[{static_cast<int>(iv), static_cast<int>(iu)}] =
            static_cast<int>(P.pairs.size());
        P.pairs.push_back({static_cast<int>(iv), static_cast<int>(iu)});
      }
  UF uf(P.pairs.size());
  const FiniteCategory& D = *u.tgt;
  for (int g = 0; g < D.num_arrows(); ++g) {
    int d0 = D.arrows[static_cast<size_t>(g)].src, d1 = D.arrows[static_cast<size_t>(g)].tgt;
    for (size_t iv = 0; iv < v.elems.size(); ++iv) {
      if (v.elems[iv].c != d1) continue;
      int yv = v.right(g, static_cast<int>(iv));  // y.g over d0
      for (size_t iu = 0; iu < u.elems.size(); ++iu) {
        if (u.elems[iu].d != d0) continue;
        int gx = u.left(g, static_cast<int>(iu));  // g.x over d1
        uf.unite(P.pair_index.at({yv, static_cast<int>(iu)}),
                 P.pair_index.at({static_cast<int>(iv), gx}));
      }
    }
  }
  std::map<int, int> class_id;
  for (size_t t = 0; t < P.pairs.size(); ++t) {
    int r = uf.find(static_cast<int>(t));
    if (!class_id.count(r)) {
      class_id[r] = static_cast<int>(P.rep_of.size());
      P.rep_of.push_back(r);  // r is the smallest pair index in its class
    }
    P.root_of.push_back(class_id[r]);
  }
  return P;
}

}  // namespace

TensorResult tensor_coend(const Profunctor& v, const Profunctor& u) {
  if (u.tgt != v.src) throw std::invalid_argument("tensor: middle categories differ");
  CoendPairs P = coend_pairs(v, u);
  TensorResult R;
  R.prof.src = u.src;
  R.prof.tgt = v.tgt;
  for (size_t cls = 0; cls < P.rep_of.size(); ++cls) {
    auto [iv, iu] = P.pairs[static_cast<size_t>(P.rep_of[cls])];
    int c = u.elems[static_cast<size_t>(iu)].c;
    int e = v.elems[static_cast<size_t>(iv)].d;
    R.prof.elems.push_back({c, e});
    R.prof.at[{c, e}].push_back(static_cast<int>(cls));
  }
  for (size_t t = 0; t < P.pairs.size(); ++t) R.class_of[P.pairs[t]] = P.root_of[t];
  const FiniteCategory& E = *v.tgt;
  for (int h = 0; h < E.num_arrows(); ++h)
    for (size_t cls = 0; cls < P.rep_of.size(); ++cls) {
      auto [iv, iu] = P.pairs[static_cast<size_t>(P.rep_of[cls])];
      if (R.prof.elems[cls].d != E.arrows[static_cast<size_t>(h)].src) continue;
      R.prof.lact[{h, static_cast<int>(cls)}] = R.class_of.at({v.left(h, iv), iu});
    }
  const FiniteCategory& C = *u.src;
  for (int f = 0; f < C.num_arrows(); ++f)
    for (size_t cls = 0; cls < P.rep_of.size(); ++cls) {
      auto [iv, iu] = P.pairs[static_cast<size_t>(P.rep_of[cls])];
      if (R.prof.elems[cls].c != C.arrows[static_cast<size_t>(f)].tgt) continue;
      R.prof.ract[{f, static_cast<int>(cls)}] = R.class_of.at({iv, u.right(f, iu)});
    }
  return R;
}

TensorResult tensor_geometric(const Profunctor& v, const Profunctor& u) {
  if (u.tgt != v.src) throw std::invalid_argument("tensor: middle categories differ");
  // glue the collages over the shared middle; cross classes c -> e arise from
  // composable cross pairs modulo sliding D-arrows across the middle
  CollageResult CU = collage(u);
  CollageResult CV = collage(v);
  const FiniteCategory& C = *u.src;
  const FiniteCategory& D = *u.tgt;
  const FiniteCategory& E = *v.tgt;
  CoendPairs P = coend_pairs(v, u);

  auto G = std::make_shared<FiniteCategory>();
  int nc = C.num_objects, nd = D.num_objects, ne = E.num_objects;
  G->num_objects = nc + nd + ne;
  std::vector<int> ca, da, ea, ux, vx, cl;
  for (int a = 0; a < C.num_arrows(); ++a) {
    ca.push_back(G->num_arrows());
    G->arrows.push_back(C.arrows[static_cast<size_t>(a)]);
  }
  for (int a = 0; a < D.num_arrows(); ++a) {
    da.push_back(G->num_arrows());
    G->arrows.push_back({D.arrows[static_cast<size_t>(a)].src + nc,
                         D.arrows[static_cast<size_t>(a)].tgt + nc, ""});
  }
  for (int a = 0; a < E.num_arrows(); ++a) {
    ea.push_back(G->num_arrows());
    G->arrows.push_back({E.arrows[static_cast<size_t>(a)].src + nc + nd,
                         E.arrows[static_cast<size_t>(a)].tgt + nc + nd, ""});
  }
  for (const auto& el : u.elems) {
    ux.push_back(G->num_arrows());
    G->arrows.push_back({el.c, el.d + nc, ""});
  }
  for (const auto& el : v.elems) {
    vx.push_back(G->num_arrows());
    G->arrows.push_back({el.c + nc, el.d + nc + nd, ""});
  }
  for (size_t t = 0; t < P.rep_of.size(); ++t) {
    auto [iv, iu] = P.pairs[static_cast<size_t>(P.rep_of[t])];
    cl.push_back(G->num_arrows());
    G->arrows.push_back({u.elems[static_cast<size_t>(iu)].c,
                         v.elems[static_cast<size_t>(iv)].d + nc + nd, ""});
  }
  for (int o = 0; o < nc; ++o) G->ids.push_back(ca[static_cast<size_t>(C.ids[static_cast<size_t>(o)])]);
  for (int o = 0; o < nd; ++o) G->ids.push_back(da[static_cast<size_t>(D.ids[static_cast<size_t>(o)])]);
  for (int o = 0; o < ne; ++o) G->ids.push_back(ea[static_cast<size_t>(E.ids[static_cast<size_t>(o)])]);
  for (const auto& [k, r] : C.comp) G->comp[{ca[static_cast<size_t>(k.first)], ca[static_cast<size_t>(k.second)]}] = ca[static_cast<size_t>(r)];
  for (const auto& [k, r] : D.comp) G->comp[{da[static_cast<size_t>(k.first)], da[static_cast<size_t>(k.second)]}] = da[static_cast<size_t>(r)];
  for (const auto& [k, r] : E.comp) G->comp[{ea[static_cast<size_t>(k.first)], ea[static_cast<size_t>(k.second)]}] = ea[static_cast<size_t>(r)];
  for (const auto& [k, r] : u.ract) G->comp[{ux[static_cast<size_t>(k.second)], ca[static_cast<size_t>(k.first)]}] = ux[static_cast<size_t>(r)];
  for (const auto& [k, r] : u.lact) G->comp[{da[static_cast<size_t>(k.first)], ux[static_cast<size_t>(k.second)]}] = ux[static_cast<size_t>(r)];
  for (const auto& [k, r] : v.ract) G->comp[{vx[static_cast<size_t>(k.second)], da[static_cast<size_t>(k.first)]}] = vx[static_cast<size_t>(r)];
  for (const auto& [k, r] : v.lact) G->comp[{ea[static_cast<size_t>(k.first)], vx[static_cast<size_t>(k.second)]}] = vx[static_cast<size_t>(r)];
  // new composites across the middle
  for (const auto& [pair, t] : P.pair_index) {
    G->comp[{vx[static_cast<size_t>(pair.first)], ux[static_cast<size_t>(pair.second)]}] =
        cl[static_cast<size_t>(P.root_of[static_cast<size_t>(t)])];
  }
  for (size_t t = 0; t < P.rep_of.size(); ++t) {
    auto [iv, iu] = P.pairs[static_cast<size_t>(P.rep_of[t])];
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.arrows[static_cast<size_t>(f)].tgt == u.elems[static_cast<size_t>(iu)].c)
        G->comp[{cl[t], ca[static_cast<size_t>(f)]}] =
            cl[static_cast<size_t>(P.root_of[static_cast<size_t>(
                P.pair_index.at({iv, u.right(f, iu)}))])];
    for (int h = 0; h < E.num_arrows(); ++h)
      if (E.arrows[static_cast<size_t>(h)].src == v.elems[static_cast<size_t>(iv)].d)
        G->comp[{ea[static_cast<size_t>(h)], cl[t]}] =
            cl[static_cast<size_t>(P.root_of[static_cast<size_t>(
                P.pair_index.at({v.left(h, iv), iu}))])];
  }
  (void)CU;
  (void)CV;

  // functor to [2] and pullback along the outer edge 0 -> 2
  auto S = std::make_shared<FiniteCategory>();
  S->num_objects = nc + ne;
  std::vector<int> sca, sea, scl;
  auto shift_obj = [&](int o) { return o < nc ? o : o - nd; };
  for (int a : ca) {
    sca.push_back(S->num_arrows());
    S->arrows.push_back(G->arrows[static_cast<size_t>(a)]);
  }
  for (int a : ea) {
    sea.push_back(S->num_arrows());
    S->arrows.push_back({shift_obj(G->arrows[static_cast<size_t>(a)].src),
                         shift_obj(G->arrows[static_cast<size_t>(a)].tgt), ""});
  }
  for (int a : cl) {
    scl.push_back(S->num_arrows());
    S->arrows.push_back({shift_obj(G->arrows[static_cast<size_t>(a)].src),
                         shift_obj(G->arrows[static_cast<size_t>(a)].tgt), ""});
  }
  std::vector<int> g2s(static_cast<size_t>(G->num_arrows()), -1);
  for (size_t i = 0; i < ca.size(); ++i) g2s[static_cast<size_t>(ca[i])] = sca[i];
  for (size_t i = 0; i < ea.size(); ++i) g2s[static_cast<size_t>(ea[i])] = sea[i];
  for (size_t i = 0; i < cl.size(); ++i) g2s[static_cast<size_t>(cl[i])] = scl[i];
  for (int o = 0; o < nc; ++o) S->ids.push_back(g2s[static_cast<size_t>(G->ids[static_cast<size_t>(o)])]);
  for (int o = 0; o < ne; ++o)
    S->ids.push_back(g2s[static_cast<size_t>(G->ids[static_cast<size_t>(o + nc + nd)])]);
  for (const auto& [k, r] : G->comp)
    if (g2s[static_cast<size_t>(k.first)] >= 0 && g2s[static_cast<size_t>(k.second)] >= 0 &&
        g2s[static_cast<size_t>(r)] >= 0)
      S->comp[{g2s[static_cast<size_t>(k.first)], g2s[static_cast<size_t>(k.second)]}] =
          g2s[static_cast<size_t>(r)];

  FunctorData q;
  q.source = S;
  q.target = chain_category(1);
  for (int o = 0; o < S->num_objects; ++o) q.obj.push_back(o < nc ? 0 : 1);
  q.arr.assign(static_cast<size_t>(S->num_arrows()), chain_arrow(1, 0, 1));
  for (int a : sca) q.arr[static_cast<size_t>(a)] = chain_arrow(1, 0, 0);
  for (int a : sea) q.arr[static_cast<size_t>(a)] = chain_arrow(1, 1, 1);

  CollageDecomp dec = from_collage(q);
  TensorResult R;
  R.prof = dec.u;
  // cross arrows were appended class-by-class, so elem order equals class order
  std::vector<int> class_elem(P.rep_of.size(), -1);
  for (size_t e = 0; e < dec.elem_arrow.size(); ++e)
    for (size_t t = 0; t < scl.size(); ++t)
      if (dec.elem_arrow[e] == scl[t]) class_elem[t] = static_cast<int>(e);
  for (const auto& [pair, t] : P.pair_index)
    R.class_of[pair] = class_elem[static_cast<size_t>(P.root_of[static_cast<size_t>(t)])];
  return R;
}

std::optional<ProfMap> tensor_comparison(const TensorResult& A, const TensorResult& B) {
  ProfMap m;
  m.assignment.assign(A.prof.elems.size(), -1);
  for (const auto& [pair, a] : A.class_of) {
    auto it = B.class_of.find(pair);
    if (it == B.class_of.end()) return std::nullopt;
    int& slot = m.assignment[static_cast<size_t>(a)];
    if (slot >= 0 && slot != it->second) return std::nullopt;
    slot = it->second;
  }
  for (int s : m.assignment)
    if (s < 0) return std::nullopt;
  if (!validate_prof_map(A.prof, B.prof, m).ok()) return std::nullopt;
  return m;
}

// ---- lax diagrams ---------------------------------------------------------

ValidationReport validate_lax(const LaxProfDiagram& D) {
  ValidationReport rep = validate_cat(*D.base);
  const FiniteCategory& A = *D.base;
  if (static_cast<int>(D.vertex.size()) != A.num_objects ||
      static_cast<int>(D.edge.size()) != A.num_arrows()) {
    rep.issues.push_back("lax diagram: table size mismatch");
    return rep;
  }
  for (int f = 0; f < A.num_arrows(); ++f) {
    const Profunctor& u = D.edge[static_cast<size_t>(f)];
    if (u.src != D.vertex[static_cast<size_t>(A.arrows[static_cast<size_t>(f)].src)] ||
        u.tgt != D.vertex[static_cast<size_t>(A.arrows[static_cast<size_t>(f)].tgt)])
      rep.issues.push_back("lax diagram: edge endpoints wrong at arrow " + std::to_string(f));
    ValidationReport pr = validate_prof(u);
    rep.issues.insert(rep.issues.end(), pr.issues.begin(), pr.issues.end());
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < A.num_objects; ++o)
    if (!same_prof(D.edge[static_cast<size_t>(A.ids[static_cast<size_t>(o)])],
                   hom_profunctor(D.vertex[static_cast<size_t>(o)]).prof))
      rep.issues.push_back("lax diagram not normal at object " + std::to_string(o));
  // mu: a profunctor map on each composable pair
  std::map<std::pair<int, int>, TensorResult> tens;
  for (int g = 0; g < A.num_arrows(); ++g)
    for (int f = 0; f < A.num_arrows(); ++f) {
      if (!A.composable(g, f)) continue;
      auto it = D.mu.find({g, f});
      if (it == D.mu.end()) {
        rep.issues.push_back("lax diagram: missing mu");
        return rep;
      }
      TensorResult t =
          tensor_coend(D.edge[static_cast<size_t>(g)], D.edge[static_cast<size_t>(f)]);
      ProfMap m{it->second};
      ValidationReport mr =
          validate_prof_map(t.prof, D.edge[static_cast<size_t>(A.compose_arr(g, f))], m);
      rep.issues.insert(rep.issues.end(), mr.issues.begin(), mr.issues.end());
      tens.emplace(std::make_pair(g, f), std::move(t));
    }
  if (!rep.ok()) return rep;
  // normal unit conditions: mu against identity edges is the action
  for (int f = 0; f < A.num_arrows(); ++f) {
    const CatArrow& af = A.arrows[static_cast<size_t>(f)];
    const Profunctor& u = D.edge[static_cast<size_t>(f)];
    int idb = A.ids[static_cast<size_t>(af.tgt)];
    CompanionResult homb = hom_profunctor(D.vertex[static_cast<size_t>(af.tgt)]);
    const TensorResult& tl = tens.at({idb, f});
    for (const auto& [pair, cls] : tl.class_of) {
      int expected = u.left(homb.arrow_of[static_cast<size_t>(pair.first)], pair.second);
      if (D.mu.at({idb, f})[static_cast<size_t>(cls)] != expected)
        rep.issues.push_back("left unit law fails at arrow " + std::to_string(f));
    }
    int ida = A.ids[static_cast<size_t>(af.src)];
    CompanionResult homa = hom_profunctor(D.vertex[static_cast<size_t>(af.src)]);
    const TensorResult& tr = tens.at({f, ida});
    for (const auto& [pair, cls] : tr.class_of) {
      int expected = u.right(homa.arrow_of[static_cast<size_t>(pair.second)], pair.first);
      if (D.mu.at({f, ida})[static_cast<size_t>(cls)] != expected)
        rep.issues.push_back("right unit law fails at arrow " + std::to_string(f));
    }
  }
  // lax associativity on raw triples
  for (int h = 0; h < A.num_arrows(); ++h)
    for (int g = 0; g < A.num_arrows(); ++g) {
      if (!A.composable(h, g)) continue;
      for (int f = 0; f < A.num_arrows(); ++f) {
        if (!A.composable(g, f)) continue;
        int gf = A.compose_arr(g, f), hg = A.compose_arr(h, g);
        const TensorResult& t_gf = tens.at({g, f});
        const TensorResult& t_hg = tens.at({h, g});
        TensorResult t_h_gf = tensor_coend(D.edge[static_cast<size_t>(h)],
                                           D.edge[static_cast<size_t>(gf)]);
        TensorResult t_hg_f = tensor_coend(D.edge[static_cast<size_t>(hg)],
                                           D.edge[static_cast<size_t>(f)]);
        const Profunctor& eh = D.edge[static_cast<size_t>(h)];
        const Profunctor& eg = D.edge[static_cast<size_t>(g)];
        const Profunctor& ef = D.edge[static_cast<size_t>(f)];
        for (size_t iz = 0; iz < eh.elems.size(); ++iz)
          for (size_t iy = 0; iy < eg.elems.size(); ++iy) {
            if (eg.elems[iy].d != eh.elems[iz].c) continue;
            for (size_t ix = 0; ix < ef.elems.size(); ++ix) {
              if (ef.elems[ix].d != eg.elems[iy].c) continue;
              int m_gf = D.mu.at({g, f})[static_cast<size_t>(
                  t_gf.class_of.at({static_cast<int>(iy), static_cast<int>(ix)}))];
              int lhs = D.mu.at({h, gf})[static_cast<size_t>(
                  t_h_gf.class_of.at({static_cast<int>(iz), m_gf}))];
              int m_hg = D.mu.at({h, g})[static_cast<size_t>(
                  t_hg.class_of.at({static_cast<int>(iz), static_cast<int>(iy)}))];
              int rhs = D.mu.at({hg, f})[static_cast<size_t>(
                  t_hg_f.class_of.at({m_hg, static_cast<int>(ix)}))];
              if (lhs != rhs)
                rep.issues.push_back("lax associativity fails at (" + std::to_string(h) + "," +
                                     std::to_string(g) + "," + std::to_string(f) + ")");
            }
          }
      }
    }
  return rep;
}

// ---- classifying diagrams -------------------------------------------------

ClassifyingCat classifying_diagram_cat(const FunctorData& F) {
  ClassifyingCat R;
  const FiniteCategory& X = *F.source;
  const FiniteCategory& A = *F.target;
  R.diagram.base = F.target;
  std::vector<std::vector<int>> fiber_arr(static_cast<size_t>(A.num_objects));
  std::vector<std::map<int, int>> obj_idx(static_cast<size_t>(A.num_objects));
  R.fiber_obj.resize(static_cast<size_t>(A.num_objects));
  for (int a = 0; a < A.num_objects; ++a) {
    auto K = std::make_shared<FiniteCategory>();
    for (int x = 0; x < X.num_objects; ++x)
      if (F.obj[static_cast<size_t>(x)] == a) {
        obj_idx[static_cast<size_t>(a)][x] = K->num_objects++;
        R.fiber_obj[static_cast<size_t>(a)].push_back(x);
      }
    std::map<int, int> arr_idx;
    for (int l = 0; l < X.num_arrows(); ++l)
      if (F.arr[static_cast<size_t>(l)] == A.ids[static_cast<size_t>(a)]) {
        arr_idx[l] = static_cast<int>(fiber_arr[static_cast<size_t>(a)].size());
        fiber_arr[static_cast<size_t>(a)].push_back(l);
        K->arrows.push_back({obj_idx[static_cast<size_t>(a)].at(X.arrows[static_cast<size_t>(l)].src),
                             obj_idx[static_cast<size_t>(a)].at(X.arrows[static_cast<size_t>(l)].tgt),
                             ""});
      }
    for (int x : R.fiber_obj[static_cast<size_t>(a)])
      K->ids.push_back(arr_idx.at(X.ids[static_cast<size_t>(x)]));
    for (int g : fiber_arr[static_cast<size_t>(a)])
      for (int f : fiber_arr[static_cast<size_t>(a)])
        if (X.composable(g, f))
          K->comp[{arr_idx.at(g), arr_idx.at(f)}] = arr_idx.at(X.compose_arr(g, f));
    R.diagram.vertex.push_back(K);
  }
  R.elem_arrow.resize(static_cast<size_t>(A.num_arrows()));
  std::vector<std::map<int, int>> elem_idx(static_cast<size_t>(A.num_arrows()));
  for (int f = 0; f < A.num_arrows(); ++f) {
    const CatArrow& af = A.arrows[static_cast<size_t>(f)];
    if (A.is_id(f)) {
      CompanionResult hp = hom_profunctor(R.diagram.vertex[static_cast<size_t>(af.src)]);
      R.diagram.edge.push_back(hp.prof);
      for (int j : hp.arrow_of)
        R.elem_arrow[static_cast<size_t>(f)].push_back(fiber_arr[static_cast<size_t>(af.src)][static_cast<size_t>(j)]);
    } else {
      Profunctor u;
      u.src = R.diagram.vertex[static_cast<size_t>(af.src)];
      u.tgt = R.diagram.vertex[static_cast<size_t>(af.tgt)];
      for (int l = 0; l < X.num_arrows(); ++l)
        if (F.arr[static_cast<size_t>(l)] == f) {
          int e = static_cast<int>(u.elems.size());
          int c = obj_idx[static_cast<size_t>(af.src)].at(X.arrows[static_cast<size_t>(l)].src);
          int d = obj_idx[static_cast<size_t>(af.tgt)].at(X.arrows[static_cast<size_t>(l)].tgt);
          u.elems.push_back({c, d});
          u.at[{c, d}].push_back(e);
          R.elem_arrow[static_cast<size_t>(f)].push_back(l);
        }
      for (size_t gi = 0; gi < fiber_arr[static_cast<size_t>(af.tgt)].size(); ++gi)
        for (size_t e = 0; e < u.elems.size(); ++e) {
          int m = fiber_arr[static_cast<size_t>(af.tgt)][gi];
          int l = R.elem_arrow[static_cast<size_t>(f)][e];
          if (X.composable(m, l)) {
            int r = X.compose_arr(m, l);
            int ri = -1;
            for (size_t t = 0; t < R.elem_arrow[static_cast<size_t>(f)].size(); ++t)
              if (R.elem_arrow[static_cast<size_t>(f)][t] == r) ri = static_cast<int>(t);
            u.lact[{static_cast<int>(gi), static_cast<int>(e)}] = ri;
          }
        }
      for (size_t fi = 0; fi < fiber_arr[static_cast<size_t>(af.src)].size(); ++fi)
        for (size_t e = 0; e < u.elems.size(); ++e) {
          int m = fiber_arr[static_cast<size_t>(af.src)][fi];
          int l = R.elem_arrow[static_cast<size_t>(f)][e];
          if (X.composable(l, m)) {
            int r = X.compose_arr(l, m);
            int ri = -1;
            for (size_t t = 0; t < R.elem_arrow[static_cast<size_t>(f)].size(); ++t)
              if (R.elem_arrow[static_cast<size_t>(f)][t] == r) ri = static_cast<int>(t);
            u.ract[{static_cast<int>(fi), static_cast<int>(e)}] = ri;
          }
        }
      R.diagram.edge.push_back(std::move(u));
    }
    for (size_t e = 0; e < R.elem_arrow[static_cast<size_t>(f)].size(); ++e)
      elem_idx[static_cast<size_t>(f)][R.elem_arrow[static_cast<size_t>(f)][e]] =
          static_cast<int>(e);
  }
  for (int g = 0; g < A.num_arrows(); ++g)
    for (int f = 0; f < A.num_arrows(); ++f) {
      if (!A.composable(g, f)) continue;
      int gf = A.compose_arr(g, f);
      TensorResult t = tensor_coend(R.diagram.edge[static_cast<size_t>(g)],
                                    R.diagram.edge[static_cast<size_t>(f)]);
      std::vector<int> mu(t.prof.elems.size(), -1);
      for (const auto& [pair, cls] : t.class_of) {
        int y = R.elem_arrow[static_cast<size_t>(g)][static_cast<size_t>(pair.first)];
        int x = R.elem_arrow[static_cast<size_t>(f)][static_cast<size_t>(pair.second)];
        mu[static_cast<size_t>(cls)] = elem_idx[static_cast<size_t>(gf)].at(X.compose_arr(y, x));
      }
      R.diagram.mu[{g, f}] = std::move(mu);
    }
  return R;
}

// ---- double colimits ------------------------------------------------------

DcolimProf dcolim_prof(const LaxProfDiagram& D) {
  const FiniteCategory& A = *D.base;
  DcolimProf R;
  auto T = std::make_shared<FiniteCategory>();
  for (int a = 0; a < A.num_objects; ++a)
    for (int x = 0; x < D.vertex[static_cast<size_t>(a)]->num_objects; ++x) {
      R.obj_index[{a, x}] = static_cast<int>(R.obj.size());
      R.obj.push_back({a, x});
    }
  T->num_objects = static_cast<int>(R.obj.size());
  for (int f = 0; f < A.num_arrows(); ++f) {
    const CatArrow& af = A.arrows[static_cast<size_t>(f)];
    const Profunctor& u = D.edge[static_cast<size_t>(f)];
    for (size_t e = 0; e < u.elems.size(); ++e) {
      R.arr_index[{f, static_cast<int>(e)}] = static_cast<int>(R.arr.size());
      R.arr.push_back({f, static_cast<int>(e)});
      T->arrows.push_back({R.obj_index.at({af.src, u.elems[e].c}),
                           R.obj_index.at({af.tgt, u.elems[e].d}), ""});
    }
  }
  for (const auto& [a, x] : R.obj) {
    CompanionResult hp = hom_profunctor(D.vertex[static_cast<size_t>(a)]);
    int ida = A.ids[static_cast<size_t>(a)];
    int e = hp.elem_of.at({x, D.vertex[static_cast<size_t>(a)]->ids[static_cast<size_t>(x)]});
    T->ids.push_back(R.arr_index.at({ida, e}));
  }
  std::map<std::pair<int, int>, TensorResult> tens;
  for (int g = 0; g < A.num_arrows(); ++g)
    for (int f = 0; f < A.num_arrows(); ++f)
      if (A.composable(g, f))
        tens.emplace(std::make_pair(g, f),
                     tensor_coend(D.edge[static_cast<size_t>(g)], D.edge[static_cast<size_t>(f)]));
  for (size_t jg = 0; jg < R.arr.size(); ++jg)
    for (size_t jf = 0; jf < R.arr.size(); ++jf) {
      const auto& [g, ev] = R.arr[jg];
      const auto& [f, eu] = R.arr[jf];
      if (!A.composable(g, f)) continue;
      if (D.edge[static_cast<size_t>(f)].elems[static_cast<size_t>(eu)].d !=
          D.edge[static_cast<size_t>(g)].elems[static_cast<size_t>(ev)].c)
        continue;
      int gf = A.compose_arr(g, f);
      int cls = tens.at({g, f}).class_of.at({ev, eu});
      T->comp[{static_cast<int>(jg), static_cast<int>(jf)}] =
          R.arr_index.at({gf, D.mu.at({g, f})[static_cast<size_t>(cls)]});
    }
  R.total = T;
  R.proj.source = T;
  R.proj.target = D.base;
  for (const auto& [a, x] : R.obj) {
    (void)x;
    R.proj.obj.push_back(a);
  }
  for (const auto& [f, e] : R.arr) {
    (void)e;
    R.proj.arr.push_back(f);
  }
  return R;
}

RoundtripCat roundtrip_cat(const FunctorData& F) {
  ClassifyingCat CC = classifying_diagram_cat(F);
  DcolimProf DC = dcolim_prof(CC.diagram);
  RoundtripCat out;
  out.comparison.source = DC.total;
  out.comparison.target = F.source;
  for (const auto& [a, xi] : DC.obj)
    out.comparison.obj.push_back(CC.fiber_obj[static_cast<size_t>(a)][static_cast<size_t>(xi)]);
  for (const auto& [f, e] : DC.arr)
    out.comparison.arr.push_back(CC.elem_arrow[static_cast<size_t>(f)][static_cast<size_t>(e)]);
  ValidationReport vr = validate_functor(out.comparison);
  if (!vr.ok()) {
    out.reason = "comparison not a functor: " + vr.issues.front();
    return out;
  }
  if (!functor_is_iso(out.comparison)) {
    out.reason = "comparison not bijective";
    return out;
  }
  if (!same_functor(compose_functor(F, out.comparison), DC.proj)) {
    out.reason = "comparison does not commute over the base";
    return out;
  }
  out.iso = true;
  return out;
}

GroVsDcolim gro_vs_dcolim(const CatDiagram& F) {
  GroVsDcolim out;
  const FiniteCategory& A = *F.base;
  LaxProfDiagram L;
  L.base = F.base;
  L.vertex = F.at;
  std::vector<CompanionResult> comp;
  for (int f = 0; f < A.num_arrows(); ++f)
    comp.push_back(companion(F.on[static_cast<size_t>(f)]));
  for (const CompanionResult& c : comp) L.edge.push_back(c.prof);
  for (int g = 0; g < A.num_arrows(); ++g)
    for (int f = 0; f < A.num_arrows(); ++f) {
      if (!A.composable(g, f)) continue;
      int gf = A.compose_arr(g, f);
      const FiniteCategory& Fc =
          *F.at[static_cast<size_t>(A.arrows[static_cast<size_t>(g)].tgt)];
      const FunctorData& Fg = F.on[static_cast<size_t>(g)];
      TensorResult t = tensor_coend(L.edge[static_cast<size_t>(g)], L.edge[static_cast<size_t>(f)]);
      std::vector<int> mu(t.prof.elems.size(), -1);
      for (const auto& [pair, cls] : t.class_of) {
        int be = comp[static_cast<size_t>(g)].arrow_of[static_cast<size_t>(pair.first)];
        int al = comp[static_cast<size_t>(f)].arrow_of[static_cast<size_t>(pair.second)];
        int x0 = comp[static_cast<size_t>(f)].prof.elems[static_cast<size_t>(pair.second)].c;
        int val = Fc.compose_arr(be, Fg.arr[static_cast<size_t>(al)]);
        mu[static_cast<size_t>(cls)] = comp[static_cast<size_t>(gf)].elem_of.at({x0, val});
      }
      L.mu[{g, f}] = std::move(mu);
    }
  ValidationReport lr = validate_lax(L);
  if (!lr.ok()) {
    out.reason = "companion diagram invalid: " + lr.issues.front();
    return out;
  }
  DcolimProf DC = dcolim_prof(L);
  GrothendieckResult GR = grothendieck(F);
  FunctorData cmp;
  cmp.source = DC.total;
  cmp.target = GR.total;
  for (const auto& [a, x] : DC.obj) cmp.obj.push_back(GR.obj_index.at({a, x}));
  for (const auto& [f, e] : DC.arr) {
    int x0 = comp[static_cast<size_t>(f)].prof.elems[static_cast<size_t>(e)].c;
    int al = comp[static_cast<size_t>(f)].arrow_of[static_cast<size_t>(e)];
    cmp.arr.push_back(GR.arr_index.at({f, x0, al}));
  }
  ValidationReport vr = validate_functor(cmp);
  if (!vr.ok()) {
    out.reason = "comparison not a functor: " + vr.issues.front();
    return out;
  }
  if (!functor_is_iso(cmp)) {
    out.reason = "comparison not bijective";
    return out;
  }
  if (!same_functor(compose_functor(GR.proj, cmp), DC.proj)) {
    out.reason = "comparison does not commute over the base";
    return out;
  }
  out.iso = true;
  return out;
}

}  // namespace corrkit
