#include "corrkit/corr.hpp"

#include <algorithm>

#include "corrkit/mapsearch.hpp"
#include <stdexcept>

namespace corrkit {

namespace {

// chi_{>i} : Delta^{m+1} -> Delta^1, the characteristic map of {i+1,...,m+1}.
Monotone chi_gt(int i, int m) {
  std::vector<int> vals(static_cast<size_t>(m) + 2);
  for (int j = 0; j <= m + 1; ++j) vals[static_cast<size_t>(j)] = j <= i ? 0 : 1;
  return Monotone{vals, 1};
}

// Map into Delta^m determined by vertex images (must be spine-monotone).
SimplicialMap map_to_delta(SsetPtr W, int m, const std::vector<int>& vertex_image) {
  SimplicialMap out;
  out.source = W;
  out.target = standard_simplex(m);
  for (CellId c = 0; c < static_cast<CellId>(W->num_cells()); ++c) {
    std::vector<int> tuple;
    for (const SimplexRef& v : simplex_vertices(*W, SimplexRef{{}, c}))
      tuple.push_back(vertex_image[v.cell]);
    out.assignment.push_back(delta_simplex(m, tuple));
  }
  return out;
}

// theta as a composite of cofaces/codegeneracies, outermost first.
std::vector<Monotone> decompose(const Monotone& theta) {
  EpiMono em = factor(theta);
  std::vector<Monotone> out;
  int m = theta.target;
  std::vector<int> missing;
  {
    std::vector<char> hit(static_cast<size_t>(m) + 1, 0);
    for (int v : em.mono.values) hit[static_cast<size_t>(v)] = 1;
    for (int v = 0; v <= m; ++v)
      if (!hit[static_cast<size_t>(v)]) missing.push_back(v);
  }
  int d = m;
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) out.push_back(coface(*it, d--));
  std::vector<int> word = word_of_epi(em.epi);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(codegeneracy(*it, d++));

  Monotone check = identity_mono(theta.source_dim());
  for (auto it = out.rbegin(); it != out.rend(); ++it) check = compose(*it, check);
  if (!(check == theta)) throw std::logic_error("decompose: bad factorization");
  return out;
}

}  // namespace

ValidationReport validate_corr(const Correspondence& X) {
  ValidationReport rep = validate_sset(*X.total);
  if (X.n < 0) rep.issues.push_back("correspondence: negative base dimension");
  if (X.structure.source != X.total)
    rep.issues.push_back("correspondence: structure map source is not the total space");
  if (!X.structure.target || X.structure.target->dim() != X.n ||
      X.structure.target->count_cells_of_dim(X.n) != 1)
    rep.issues.push_back("correspondence: structure map target is not a standard simplex");
  ValidationReport mr = validate_map(X.structure);
  rep.issues.insert(rep.issues.end(), mr.issues.begin(), mr.issues.end());
  return rep;
}

Correspondence trivial_corr(SsetPtr X) { return Correspondence{X, 0, terminal_map(X)}; }

Correspondence delta_corr(int n) {
  return Correspondence{standard_simplex(n), n, identity_map(standard_simplex(n))};
}

FiberResult fiber(const SimplicialMap& f, const SimplexRef& sigma) {
  int n = ref_dim(*f.target, sigma);
  PullbackResult pb = pullback(f, classifying_map(f.target, sigma));
  FiberResult out{Correspondence{pb.object, n, pb.p2}, pb.p1, pb};
  return out;
}

// ---- DerivedCorr ----------------------------------------------------------

DerivedCorr DerivedCorr::root(Correspondence X) {
  DerivedCorr d;
  d.to_root = identity_map(X.total);
  d.theta = identity_mono(X.n);
  d.corr = std::move(X);
  d.kind_ = Kind::Root;
  return d;
}

DerivedCorr DerivedCorr::face(int i) const {
  int m = corr.n;
  if (m < 1 || i < 0 || i > m) throw std::invalid_argument("corr_face: bad index");
  DerivedCorr d;
  d.kind_ = Kind::Face;
  d.idx_ = i;
  d.parent_ = std::make_shared<DerivedCorr>(*this);
  d.pb_ = std::make_shared<PullbackResult>(pullback(corr.structure, delta_map(coface(i, m))));
  d.corr = Correspondence{d.pb_->object, m - 1, d.pb_->p2};
  d.to_root = compose(to_root, d.pb_->p1);
  d.theta = compose(theta, coface(i, m));
  return d;
}

DerivedCorr DerivedCorr::degeneracy(int i) const {
  int m = corr.n;
  if (i < 0 || i > m) throw std::invalid_argument("corr_degeneracy: bad index");
  DerivedCorr d;
  d.kind_ = Kind::Degeneracy;
  d.idx_ = i;
  d.parent_ = std::make_shared<DerivedCorr>(*this);
  d.cyl_ = std::make_shared<ProductResult>(product(corr.total, standard_simplex(1)));
  ProductResult base = product(standard_simplex(m), standard_simplex(1));
  SimplicialMap q =
      into_product(base, compose(corr.structure, d.cyl_->proj1), d.cyl_->proj2);
  SimplicialMap iota =
      into_product(base, delta_map(codegeneracy(i, m)), delta_map(chi_gt(i, m)));
  d.pb_ = std::make_shared<PullbackResult>(pullback(q, iota));
  d.corr = Correspondence{d.pb_->object, m + 1, d.pb_->p2};
  d.to_root = compose(to_root, compose(d.cyl_->proj1, d.pb_->p1));
  d.theta = compose(theta, codegeneracy(i, m));
  return d;
}

std::optional<SimplicialMap> DerivedCorr::mediate(const SimplicialMap& wX,
                                                  const SimplicialMap& wBase) const {
  switch (kind_) {
    case Kind::Root: {
      if (!same_map(compose(corr.structure, wX), wBase)) return std::nullopt;
      return wX;
    }
    case Kind::Face: {
      SimplicialMap up = compose(delta_map(coface(idx_, parent_->corr.n)), wBase);
      auto pm = parent_->mediate(wX, up);
      if (!pm) return std::nullopt;
      return pb_->mediate(*pm, wBase);
    }
    case Kind::Degeneracy: {
      SimplicialMap up = compose(delta_map(codegeneracy(idx_, parent_->corr.n)), wBase);
      auto pm = parent_->mediate(wX, up);
      if (!pm) return std::nullopt;
      SimplicialMap chi = compose(delta_map(chi_gt(idx_, parent_->corr.n)), wBase);
      return pb_->mediate(into_product(*cyl_, *pm, chi), wBase);
    }
  }
  return std::nullopt;
}

DerivedCorr corr_face(const Correspondence& X, int i) { return DerivedCorr::root(X).face(i); }

DerivedCorr corr_degeneracy(const Correspondence& X, int i) {
  return DerivedCorr::root(X).degeneracy(i);
}

// ---- deletion presentations ----------------------------------------------

SubcomplexResult subcomplex(SsetPtr X, const std::vector<char>& keep) {
  auto Y = std::make_shared<SimplicialSet>();
  std::vector<CellId> remap(static_cast<size_t>(X->num_cells()));
  std::vector<CellId> kept;
  for (int d = 0; d <= X->dim(); ++d)
    for (CellId c : X->cells_of_dim(d)) {
      if (!keep[c]) continue;
      std::vector<SimplexRef> faces;
      for (const SimplexRef& f : X->cell(c).faces) {
        if (!keep[f.cell]) throw std::invalid_argument("subcomplex: not closed under faces");
        faces.push_back(SimplexRef{f.word, remap[f.cell]});
      }
      remap[c] = Y->add_cell(d, std::move(faces), X->cell(c).label);
      kept.push_back(c);
    }
  SimplicialMap incl;
  incl.source = Y;
  incl.target = X;
  for (CellId c : kept) incl.assignment.push_back(SimplexRef{{}, c});
  return SubcomplexResult{Y, std::move(incl)};
}

namespace {

// fiber index of each vertex of the total space
std::vector<int> vertex_fibers(const Correspondence& X) {
  std::vector<int> out(static_cast<size_t>(X.total->num_cells()), -1);
  for (CellId v : X.total->cells_of_dim(0))
    out[v] = static_cast<int>(apply(X.structure, SimplexRef{{}, v}).cell);
  return out;
}

}  // namespace

DeletionPresentation face_by_deletion(const Correspondence& X, int i) {
  std::vector<int> fib = vertex_fibers(X);
  std::vector<char> keep(static_cast<size_t>(X.total->num_cells()), 1);
  for (CellId c = 0; c < static_cast<CellId>(X.total->num_cells()); ++c)
    for (const SimplexRef& v : simplex_vertices(*X.total, SimplexRef{{}, c}))
      if (fib[v.cell] == i) keep[c] = 0;
  SubcomplexResult sub = subcomplex(X.total, keep);
  std::vector<int> vi(static_cast<size_t>(sub.object->num_cells()), 0);
  for (CellId v : sub.object->cells_of_dim(0)) {
    int j = fib[apply(sub.incl, SimplexRef{{}, v}).cell];
    vi[v] = j < i ? j : j - 1;
  }
  DeletionPresentation out;
  out.corr = Correspondence{sub.object, X.n - 1, map_to_delta(sub.object, X.n - 1, vi)};
  DerivedCorr D = corr_face(X, i);
  auto cmp = D.mediate(sub.incl, out.corr.structure);
  if (cmp) {
    out.comparison = *cmp;
    out.iso = is_iso(*cmp).is_iso;
  }
  return out;
}

DeletionPresentation degeneracy_by_deletion(const Correspondence& X, int i) {
  ProductResult P = product(X.total, standard_simplex(1));
  std::vector<int> fib = vertex_fibers(X);
  int nc = P.object->num_cells();
  std::vector<int> vj(static_cast<size_t>(nc), -1), ve(static_cast<size_t>(nc), -1);
  for (CellId v : P.object->cells_of_dim(0)) {
    vj[v] = fib[apply(P.proj1, SimplexRef{{}, v}).cell];
    ve[v] = static_cast<int>(apply(P.proj2, SimplexRef{{}, v}).cell);
  }
  std::vector<char> keep(static_cast<size_t>(nc), 1);
  for (CellId c = 0; c < static_cast<CellId>(nc); ++c)
    for (const SimplexRef& v : simplex_vertices(*P.object, SimplexRef{{}, c})) {
      int j = vj[v.cell], e = ve[v.cell];
      if ((j < i && e == 1) || (j > i && e == 0)) keep[c] = 0;
    }
  SubcomplexResult sub = subcomplex(P.object, keep);
  std::vector<int> vi(static_cast<size_t>(sub.object->num_cells()), 0);
  for (CellId v : sub.object->cells_of_dim(0)) {
    CellId pv = apply(sub.incl, SimplexRef{{}, v}).cell;
    int j = vj[pv], e = ve[pv];
    vi[v] = j < i ? j : (j == i ? i + e : j + 1);
  }
  DeletionPresentation out;
  out.corr = Correspondence{sub.object, X.n + 1, map_to_delta(sub.object, X.n + 1, vi)};
  DerivedCorr D = corr_degeneracy(X, i);
  auto cmp = D.mediate(compose(P.proj1, sub.incl), out.corr.structure);
  if (cmp) {
    out.comparison = *cmp;
    out.iso = is_iso(*cmp).is_iso;
  }
  return out;
}

// ---- weak simplicial identities ------------------------------------------

WeakIdentityReport weak_simplicial_identities_check(const Correspondence& X) {
  WeakIdentityReport rep;
  DerivedCorr R = DerivedCorr::root(X);
  int n = X.n;

  auto check = [&](const DerivedCorr& L, const DerivedCorr& Rd, const std::string& name) {
    ++rep.checked;
    if (!(L.theta == Rd.theta)) {
      rep.failures.push_back(name + ": base maps differ");
      return;
    }
    auto cmp = Rd.mediate(L.to_root, L.corr.structure);
    if (!cmp) {
      rep.failures.push_back(name + ": comparison cone does not commute");
      return;
    }
    if (!validate_map(*cmp).ok()) {
      rep.failures.push_back(name + ": comparison is not simplicial");
      return;
    }
    IsoWitness w = is_iso(*cmp);
    if (!w.is_iso) {
      rep.failures.push_back(name + ": comparison is not an iso (" + w.reason + ")");
      return;
    }
    auto rcmp = L.mediate(Rd.to_root, Rd.corr.structure);
    if (!rcmp || !same_map(*rcmp, *w.inverse))
      rep.failures.push_back(name + ": reverse comparison is not the inverse");
  };

  for (int j = 1; j <= n && n >= 2; ++j)
    for (int i = 0; i < j; ++i)
      check(R.face(j).face(i), R.face(i).face(j - 1),
            "d_" + std::to_string(i) + " d_" + std::to_string(j));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      check(R.degeneracy(j).face(i), R.face(i).degeneracy(j - 1),
            "d_" + std::to_string(i) + " s_" + std::to_string(j));
  for (int i = 0; i <= n; ++i) {
    check(R.degeneracy(i).face(i), R, "d_" + std::to_string(i) + " s_" + std::to_string(i));
    check(R.degeneracy(i).face(i + 1), R,
          "d_" + std::to_string(i + 1) + " s_" + std::to_string(i));
  }
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i)
      check(R.degeneracy(j).degeneracy(i), R.degeneracy(i).degeneracy(j + 1),
            "s_" + std::to_string(i) + " s_" + std::to_string(j));
  return rep;
}

// ---- cotabulators ---------------------------------------------------------

Cotab cotabulator(const Correspondence& X) {
  ProductResult P = product(X.total, standard_simplex(X.n));
  SimplicialMap cocone = into_product(P, identity_map(X.total), X.structure);
  return Cotab{X.total, std::move(cocone), std::move(P)};
}

// ---- classifying diagrams -------------------------------------------------

CorrDiagram classifying_diagram(const SimplicialMap& f, int truncation) {
  CorrDiagram D;
  D.base = f.target;
  D.truncation = truncation >= 0 ? truncation : D.base->dim() + 1;
  for (int d = 0; d <= D.truncation; ++d)
    for (const SimplexRef& s : enumerate_simplices(*D.base, d)) {
      D.index[s] = static_cast<int>(D.simplices.size());
      D.simplices.push_back(s);
      D.at.push_back(fiber(f, s));
    }
  for (size_t k = 0; k < D.simplices.size(); ++k) {
    const SimplexRef& sigma = D.simplices[k];
    int m = ref_dim(*D.base, sigma);
    std::vector<Monotone> gens;
    for (int i = 0; i <= m && m >= 1; ++i) gens.push_back(coface(i, m));
    if (m + 1 <= D.truncation)
      for (int i = 0; i <= m; ++i) gens.push_back(codegeneracy(i, m));
    for (const Monotone& th : gens) {
      const SimplexRef tau = act(*D.base, sigma, th);
      const FiberResult& src = D.at[static_cast<size_t>(D.index.at(tau))];
      auto med = D.at[k].pb.mediate(src.into_total,
                                    compose(delta_map(th), src.corr.structure));
      if (!med) throw std::logic_error("classifying_diagram: action cone failed");
      D.gen_act.emplace(std::make_pair(sigma, th), std::move(*med));
    }
  }
  return D;
}

SimplicialMap diagram_act(const CorrDiagram& D, const SimplexRef& sigma, const Monotone& theta) {
  if (is_identity(theta))
    return identity_map(D.at[static_cast<size_t>(D.index.at(sigma))].corr.total);
  std::vector<SimplicialMap> steps;
  SimplexRef cur = sigma;
  for (const Monotone& e : decompose(theta)) {
    steps.push_back(D.gen_act.at({cur, e}));
    cur = act(*D.base, cur, e);
  }
  SimplicialMap out = steps.back();
  for (size_t t = steps.size() - 1; t-- > 0;) out = compose(steps[t], out);
  return out;
}

ValidationReport validate_corr_diagram(const CorrDiagram& D) {
  ValidationReport rep;
  for (const auto& [key, m] : D.gen_act) {
    ValidationReport mr = validate_map(m);
    rep.issues.insert(rep.issues.end(), mr.issues.begin(), mr.issues.end());
  }
  // relations: every length-2 composite of generators equals the action of
  // the composite map (which re-normalizes through the factorization)
  for (const SimplexRef& sigma : D.simplices) {
    int m = ref_dim(*D.base, sigma);
    std::vector<Monotone> outer;
    for (int i = 0; i <= m && m >= 1; ++i) outer.push_back(coface(i, m));
    if (m + 1 <= D.truncation)
      for (int i = 0; i <= m; ++i) outer.push_back(codegeneracy(i, m));
    for (const Monotone& e : outer) {
      SimplexRef mid = act(*D.base, sigma, e);
      int a = e.source_dim();
      std::vector<Monotone> inner;
      for (int i = 0; i <= a && a >= 1; ++i) inner.push_back(coface(i, a));
      if (a + 1 <= D.truncation)
        for (int i = 0; i <= a; ++i) inner.push_back(codegeneracy(i, a));
      for (const Monotone& e2 : inner) {
        SimplicialMap lhs = compose(D.gen_act.at({sigma, e}), D.gen_act.at({mid, e2}));
        SimplicialMap rhs = diagram_act(D, sigma, compose(e, e2));
        if (!same_map(lhs, rhs))
          rep.issues.push_back("diagram action relation fails at a length-2 composite");
      }
    }
  }
  return rep;
}

// ---- double colimits ------------------------------------------------------

DoubleColimit double_colimit(const CorrDiagram& D) {
  SsetDiagram sd;
  DoubleColimit out;
  for (size_t k = 0; k < D.simplices.size(); ++k) {
    out.obj_of.push_back(static_cast<int>(k));
    sd.objects.push_back(D.at[k].corr.total);
  }
  for (const auto& [key, m] : D.gen_act) {
    const auto& [sigma, th] = key;
    SimplexRef tau = act(*D.base, sigma, th);
    sd.arrows.push_back({D.index.at(tau), D.index.at(sigma), m});
  }
  out.colim = colimit(sd);
  out.object = out.colim.object;
  out.diagram = std::move(sd);
  return out;
}

RoundtripResult roundtrip_check(const SimplicialMap& f, int truncation) {
  CorrDiagram D = classifying_diagram(f, truncation);
  DoubleColimit DC = double_colimit(D);
  std::vector<SimplicialMap> legs;
  for (const FiberResult& fr : D.at) legs.push_back(fr.into_total);
  RoundtripResult out;
  out.comparison = DC.colim.induce(legs);
  ValidationReport vr = validate_map(out.comparison);
  if (!vr.ok()) {
    out.reason = "comparison map invalid: " + vr.issues.front();
    return out;
  }
  IsoWitness w = is_iso(out.comparison);
  out.iso = w.is_iso;
  out.reason = w.reason;
  return out;
}

// ---- vertical mapping spaces ---------------------------------------------

VerticalMappingSpace vertical_mapping_space(SsetPtr X, SsetPtr Y, int n,
                                            std::uint64_t budget) {
  ProductResult PX = product(X, standard_simplex(n));
  ProductResult PY = product(Y, standard_simplex(n));
  VerticalMappingSpace out;
  out.maps = enumerate_maps_over(PX.proj2, PY.proj2, budget);
  // the proof-chain bijection: compose with the projection to Y
  std::vector<std::vector<SimplexRef>> got;
  for (const SimplicialMap& g : out.maps) got.push_back(compose(PY.proj1, g).assignment);
  std::sort(got.begin(), got.end());
  std::vector<std::vector<SimplexRef>> want;
  for (const SimplicialMap& h : enumerate_maps(PX.object, Y, budget))
    want.push_back(h.assignment);
  std::sort(want.begin(), want.end());
  out.bijection_ok =
      got == want && std::adjacent_find(got.begin(), got.end()) == got.end();
  return out;
}

}  // namespace corrkit
