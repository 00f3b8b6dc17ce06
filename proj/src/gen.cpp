#include "corrkit/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace corrkit {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) {  // uniform 0 .. n-1
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// ---- labeled simplicial-set builder ---------------------------------------

struct Labeled {
  SsetPtr object;
  std::map<CellId, int> label;  // vertex cell -> value in [0, n]
};

// Random gluing of standard simplices along faces, threading a monotone
// vertex labeling into [n] through every step.
Labeled build_labeled(const GenConfig& cfg, int n, Rng& rng) {
  Labeled L;
  int d0 = pick(rng, cfg.max_dim + 1);
  while (d0 > 0 && (1 << (d0 + 1)) - 1 > cfg.max_cells) --d0;  // cell budget
  L.object = standard_simplex(d0);
  std::vector<int> init;
  for (int i = 0; i <= d0; ++i) init.push_back(pick(rng, n + 1));
  std::sort(init.begin(), init.end());
  for (int i = 0; i <= d0; ++i)
    L.label[standard_cell_id(d0, {i})] = init[static_cast<size_t>(i)];

  int steps = 0;
  while (L.object->num_cells() < cfg.max_cells && steps++ < 2 * cfg.max_cells) {
    if (pick(rng, 6) == 0) {  // occasional extra component
      PushoutResult P = disjoint_union(L.object, standard_simplex(0));
      std::map<CellId, int> relabel;
      for (const auto& [v, l] : L.label)
        relabel[apply(P.inj1, SimplexRef{{}, v}).cell] = l;
      relabel[apply(P.inj2, SimplexRef{{}, 0}).cell] = pick(rng, n + 1);
      L.object = P.object;
      L.label = std::move(relabel);
      continue;
    }
    int m = 1 + pick(rng, cfg.max_dim);
    // gluing Delta^m along a face adds at most 2^m cells; stay in budget
    while (m > 1 && L.object->num_cells() + (1 << m) > cfg.max_cells) --m;
    if (L.object->num_cells() + (1 << m) > cfg.max_cells) break;
    std::vector<SimplexRef> sims = enumerate_simplices(*L.object, m - 1);
    if (sims.empty()) continue;
    SimplexRef sigma = sims[static_cast<size_t>(pick(rng, static_cast<int>(sims.size())))];
    int i = pick(rng, m + 1);  // the attached simplex's new vertex
    std::vector<SimplexRef> sv = simplex_vertices(*L.object, sigma);
    int lo = i > 0 ? L.label.at(sv[static_cast<size_t>(i - 1)].cell) : 0;
    int hi = i < m ? L.label.at(sv[static_cast<size_t>(i)].cell) : n;
    int newlab = lo + pick(rng, hi - lo + 1);

    SimplicialMap f = classifying_map(L.object, sigma);
    SimplicialMap g = delta_map(coface(i, m));
    PushoutResult P = pushout(f, g);
    std::map<CellId, int> relabel;
    for (const auto& [v, l] : L.label)
      relabel[apply(P.inj1, SimplexRef{{}, v}).cell] = l;
    for (int j = 0; j <= m; ++j) {
      CellId v = apply(P.inj2, delta_simplex(m, {j})).cell;
      if (!relabel.count(v)) relabel[v] = newlab;
    }
    L.object = P.object;
    L.label = std::move(relabel);
  }
  return L;
}

// ---- poset machinery ------------------------------------------------------

bool is_poset(const FiniteCategory& C) {
  for (int c = 0; c < C.num_objects; ++c)
    for (int d = 0; d < C.num_objects; ++d)
      if (C.hom(c, d).size() > 1) return false;
  return true;
}

CatPtr gen_poset(const GenConfig& cfg, Rng& rng) {
  int k = 1 + pick(rng, std::max(1, std::min(cfg.max_objects, 6)));
  std::vector<std::vector<char>> reach(static_cast<size_t>(k),
                                       std::vector<char>(static_cast<size_t>(k), 0));
  for (int i = 0; i < k; ++i) reach[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pick(rng, 3) == 0) reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  for (int m = 0; m < k; ++m)  // transitive closure
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (reach[static_cast<size_t>(i)][static_cast<size_t>(m)] &&
            reach[static_cast<size_t>(m)][static_cast<size_t>(j)])
          reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  auto C = std::make_shared<FiniteCategory>();
  C->num_objects = k;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (reach[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        idx[{i, j}] = C->num_arrows();
        C->arrows.push_back({i, j, ""});
      }
  for (int i = 0; i < k; ++i) C->ids.push_back(idx.at({i, i}));
  for (const auto& [gp, g] : idx)
    for (const auto& [fp, f] : idx)
      if (fp.second == gp.first) C->comp[{g, f}] = idx.at({fp.first, gp.second});
  return C;
}

CatPtr gen_free(const GenConfig& cfg, Rng& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    int k = 2 + pick(rng, std::max(1, std::min(cfg.max_objects, 5) - 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (pick(rng, 3) == 0) edges.push_back({i, j});
    CatPtr C = free_category(k, edges);
    if (C->num_arrows() <= cfg.max_arrows) return C;
  }
  return free_category(2, {{0, 1}});
}

// Monotone object map into a poset; constant as a last resort.
std::vector<int> monotone_obj_map(const FiniteCategory& C, const FiniteCategory& P, Rng& rng) {
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::vector<int> obj;
    for (int x = 0; x < C.num_objects; ++x) obj.push_back(pick(rng, P.num_objects));
    bool ok = true;
    for (int a = 0; a < C.num_arrows() && ok; ++a)
      if (P.hom(obj[static_cast<size_t>(C.arrows[static_cast<size_t>(a)].src)],
                obj[static_cast<size_t>(C.arrows[static_cast<size_t>(a)].tgt)])
              .empty())
        ok = false;
    if (ok) return obj;
  }
  return std::vector<int>(static_cast<size_t>(C.num_objects), 0);
}

FunctorData functor_to_poset(CatPtr C, CatPtr P, Rng& rng) {
  FunctorData F;
  F.source = C;
  F.target = P;
  F.obj = monotone_obj_map(*C, *P, rng);
  for (int a = 0; a < C->num_arrows(); ++a)
    F.arr.push_back(P->hom(F.obj[static_cast<size_t>(C->arrows[static_cast<size_t>(a)].src)],
                           F.obj[static_cast<size_t>(C->arrows[static_cast<size_t>(a)].tgt)])
                        .front());
  return F;
}

// Functor out of a chain: a composable random walk in the target.
FunctorData walk_functor(int len, CatPtr D, Rng& rng) {
  FunctorData F;
  F.source = chain_category(len);
  F.target = D;
  std::vector<int> node{pick(rng, D->num_objects)};
  std::vector<int> step;
  for (int i = 0; i < len; ++i) {
    std::vector<int> out;
    for (int a = 0; a < D->num_arrows(); ++a)
      if (D->arrows[static_cast<size_t>(a)].src == node.back()) out.push_back(a);
    int a = out[static_cast<size_t>(pick(rng, static_cast<int>(out.size())))];
    step.push_back(a);
    node.push_back(D->arrows[static_cast<size_t>(a)].tgt);
  }
  for (int i = 0; i <= len; ++i) F.obj.push_back(node[static_cast<size_t>(i)]);
  for (int i = 0; i <= len; ++i)
    for (int j = i; j <= len; ++j) {
      int a = D->ids[static_cast<size_t>(node[static_cast<size_t>(i)])];
      for (int t = i; t < j; ++t) a = D->compose_arr(step[static_cast<size_t>(t)], a);
      F.arr.push_back(a);
    }
  return F;
}

}  // namespace

SsetPtr gen_sset(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return build_labeled(cfg, 0, rng).object;
}

SimplicialMap gen_map_over(const GenConfig& cfg, int n) {
  Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n + 1)));
  Labeled L = build_labeled(cfg, n, rng);
  SimplicialMap f;
  f.source = L.object;
  f.target = standard_simplex(n);
  for (CellId c = 0; c < static_cast<CellId>(L.object->num_cells()); ++c) {
    std::vector<int> labels;
    for (const SimplexRef& v : simplex_vertices(*L.object, SimplexRef{{}, c}))
      labels.push_back(L.label.at(v.cell));
    f.assignment.push_back(delta_simplex(n, labels));
  }
  if (!validate_map(f).ok()) throw std::logic_error("gen_map_over: invalid output");
  return f;
}

CatPtr gen_category(const GenConfig& cfg) {
  Rng rng(cfg.seed ^ 0xc2b2ae3d27d4eb4full);
  if (cfg.strategy == "poset") return gen_poset(cfg, rng);
  if (cfg.strategy == "free") return gen_free(cfg, rng);
  return pick(rng, 2) == 0 ? gen_poset(cfg, rng) : gen_free(cfg, rng);
}

FunctorData gen_functor(const GenConfig& cfg) {
  Rng rng(cfg.seed ^ 0xa0761d6478bd642full);
  CatPtr C = pick(rng, 2) == 0 ? gen_poset(cfg, rng) : gen_free(cfg, rng);
  CatPtr P = gen_poset(cfg, rng);
  FunctorData F = functor_to_poset(C, P, rng);
  if (!validate_functor(F).ok()) throw std::logic_error("gen_functor: invalid output");
  return F;
}

CatDiagram gen_cat_diagram(const GenConfig& cfg, int chain_len) {
  Rng rng(cfg.seed ^ 0xe7037ed1a0b428dbull);
  CatDiagram D;
  D.base = chain_category(chain_len);
  for (int i = 0; i <= chain_len; ++i) D.at.push_back(gen_poset(cfg, rng));
  std::vector<FunctorData> step;
  for (int i = 0; i < chain_len; ++i)
    step.push_back(functor_to_poset(D.at[static_cast<size_t>(i)],
                                    D.at[static_cast<size_t>(i + 1)], rng));
  for (int i = 0; i <= chain_len; ++i)
    for (int j = i; j <= chain_len; ++j) {
      FunctorData F = identity_functor(D.at[static_cast<size_t>(i)]);
      for (int t = i; t < j; ++t) F = compose_functor(step[static_cast<size_t>(t)], F);
      D.on.push_back(std::move(F));
    }
  if (!validate_cat_diagram(D).ok()) throw std::logic_error("gen_cat_diagram: invalid output");
  return D;
}

Profunctor gen_profunctor(const GenConfig& cfg, CatPtr C, CatPtr D) {
  Rng rng(cfg.seed ^ 0x8ebc6af09c88c6e3ull);
  Profunctor u;
  u.src = C;
  u.tgt = D;
  if (!is_poset(*C) || !is_poset(*D)) return u;  // empty is always valid
  // closed monotone relation spanned by a few generating pairs
  std::vector<std::pair<int, int>> gens;
  int ngen = 1 + pick(rng, 3);
  for (int t = 0; t < ngen; ++t)
    gens.push_back({pick(rng, C->num_objects), pick(rng, D->num_objects)});
  std::map<std::pair<int, int>, int> idx;
  for (int c = 0; c < C->num_objects; ++c)
    for (int d = 0; d < D->num_objects; ++d) {
      bool in = false;
      for (const auto& [c0, d0] : gens)
        if (!C->hom(c, c0).empty() && !D->hom(d0, d).empty()) in = true;
      if (!in) continue;
      idx[{c, d}] = static_cast<int>(u.elems.size());
      u.at[{c, d}].push_back(static_cast<int>(u.elems.size()));
      u.elems.push_back({c, d});
    }
  for (int g = 0; g < D->num_arrows(); ++g)
    for (size_t e = 0; e < u.elems.size(); ++e)
      if (u.elems[e].d == D->arrows[static_cast<size_t>(g)].src)
        u.lact[{g, static_cast<int>(e)}] =
            idx.at({u.elems[e].c, D->arrows[static_cast<size_t>(g)].tgt});
  for (int f = 0; f < C->num_arrows(); ++f)
    for (size_t e = 0; e < u.elems.size(); ++e)
      if (u.elems[e].c == C->arrows[static_cast<size_t>(f)].tgt)
        u.ract[{f, static_cast<int>(e)}] =
            idx.at({C->arrows[static_cast<size_t>(f)].src, u.elems[e].d});
  if (!validate_prof(u).ok()) throw std::logic_error("gen_profunctor: invalid output");
  return u;
}

std::pair<Profunctor, Profunctor> gen_prof_pair(const GenConfig& cfg) {
  Rng rng(cfg.seed ^ 0x589965cc75374cc3ull);
  if (pick(rng, 2) == 0) {
    GenConfig c1 = cfg.with_seed(rng()), c2 = cfg.with_seed(rng()), c3 = cfg.with_seed(rng());
    Rng r1(c1.seed), r2(c2.seed);
    CatPtr C = gen_poset(c1, r1), D = gen_poset(c1, r1), E = gen_poset(c1, r1);
    Profunctor u = gen_profunctor(c2, C, D);
    Profunctor v = gen_profunctor(c3, D, E);
    return {v, u};
  }
  // companions through a free middle category: multi-element sets
  GenConfig fc = cfg.with_seed(rng());
  Rng rf(fc.seed);
  CatPtr D = gen_free(fc, rf);
  CatPtr E = gen_poset(fc, rf);
  int len = 1 + pick(rng, 2);
  FunctorData F = walk_functor(len, D, rf);
  FunctorData G = functor_to_poset(D, E, rf);
  if (!validate_functor(F).ok() || !validate_functor(G).ok())
    throw std::logic_error("gen_prof_pair: invalid functor");
  return {companion(G).prof, companion(F).prof};
}

}  // namespace corrkit
