#include "corrkit/proptest.hpp"

#include <functional>

#include "corrkit/fib.hpp"
#include "corrkit/mapsearch.hpp"

namespace corrkit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

GenConfig case_config(const GenConfig& cfg, int index, int max_cells_cap) {
  GenConfig c = cfg.with_seed(splitmix(cfg.seed + static_cast<std::uint64_t>(index)));
  c.max_cells = std::min(c.max_cells, max_cells_cap);
  return c;
}

// Greedy shrinking for map-over-Delta^n failures: drop maximal cells while
// the instance still fails.
SimplicialMap shrink_map(SimplicialMap f,
                         const std::function<bool(const SimplicialMap&)>& passes) {
  bool improved = true;
  while (improved) {
    improved = false;
    const SimplicialSet& X = *f.source;
    if (X.num_cells() <= 1) break;
    std::vector<char> referenced(static_cast<size_t>(X.num_cells()), 0);
    for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c)
      for (const SimplexRef& r : X.cell(c).faces) referenced[r.cell] = 1;
    for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
      if (referenced[c]) continue;
      std::vector<char> keep(static_cast<size_t>(X.num_cells()), 1);
      keep[c] = 0;
      SubcomplexResult sub = subcomplex(f.source, keep);
      SimplicialMap g = compose(f, sub.incl);
      bool still_fails = false;
      try {
        still_fails = !passes(g);
      } catch (const BudgetExceeded&) {
        still_fails = false;
      }
      if (still_fails) {
        f = std::move(g);
        improved = true;
        break;
      }
    }
  }
  return f;
}

struct MapSuite {
  std::vector<int> cap_for_n;  // cell budget per base dimension; cost is n-driven
  std::function<bool(const SimplicialMap&)> passes;
};

SuiteReport run_map_suite(const std::string& name, int cases, const GenConfig& cfg,
                          const MapSuite& suite) {
  SuiteReport rep;
  rep.suite = name;
  rep.cases = cases;
  for (int i = 0; i < cases; ++i) {
    int n = i % static_cast<int>(suite.cap_for_n.size());  // even coverage of dims
    GenConfig ci = case_config(cfg, i, suite.cap_for_n[static_cast<size_t>(n)]);
    SimplicialMap f = gen_map_over(ci, n);
    bool pass = false;
    std::string detail;
    try {
      pass = suite.passes(f);
    } catch (const BudgetExceeded& e) {
      detail = e.what();
    }
    if (pass) {
      ++rep.passes;
    } else {
      SimplicialMap small = shrink_map(f, suite.passes);
      rep.failures.push_back({i, detail.empty() ? "property failed" : detail,
                              wrap("map", to_json(small))});
    }
  }
  return rep;
}

bool tensor_case_passes(const Profunctor& v, const Profunctor& u, std::string& detail) {
  TensorResult a = tensor_coend(v, u);
  TensorResult b = tensor_geometric(v, u);
  auto cmp = tensor_comparison(a, b);
  if (!cmp || !prof_map_is_iso(a.prof, b.prof, *cmp)) {
    detail = "coend and geometric tensors differ";
    return false;
  }
  // unit law: hom tensor u = u via the action map
  CompanionResult homD = hom_profunctor(u.tgt);
  TensorResult unit = tensor_coend(homD.prof, u);
  ProfMap m;
  m.assignment.assign(unit.prof.elems.size(), -1);
  for (const auto& [pair, cls] : unit.class_of)
    m.assignment[static_cast<size_t>(cls)] =
        u.left(homD.arrow_of[static_cast<size_t>(pair.first)], pair.second);
  if (!prof_map_is_iso(unit.prof, u, m)) {
    detail = "unit law hom (x) u failed";
    return false;
  }
  return true;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "roundtrip-sset", "roundtrip-cat", "tensor-equivalence", "fiberwise",
      "gro-dcolim",     "weak-identities", "stabilization"};
  return names;
}

SuiteReport run_suite(const std::string& suite, int cases, const GenConfig& cfg) {
  if (suite == "roundtrip-sset")
    return run_map_suite(suite, cases, cfg, {{25, 25, 25, 12}, [](const SimplicialMap& f) {
                           return roundtrip_check(f).iso;
                         }});
  if (suite == "fiberwise")
    return run_map_suite(suite, cases, cfg, {{12, 12, 10, 8}, [](const SimplicialMap& f) {
                           return fiberwise_criterion(f).agreement;
                         }});
  if (suite == "weak-identities")
    return run_map_suite(suite, cases, cfg, {{10, 10, 8, 6}, [](const SimplicialMap& f) {
                           Correspondence X{f.source, f.target->dim(), f};
                           return weak_simplicial_identities_check(X).ok();
                         }});
  if (suite == "stabilization")
    return run_map_suite(suite, cases, cfg, {{12, 12, 10, 6}, [](const SimplicialMap& f) {
                           int n = f.target->dim();
                           return roundtrip_check(f, n + 1).iso &&
                                  roundtrip_check(f, n + 2).iso;
                         }});
  SuiteReport rep;
  rep.suite = suite;
  rep.cases = cases;
  if (suite == "roundtrip-cat") {
    for (int i = 0; i < cases; ++i) {
      FunctorData F = gen_functor(case_config(cfg, i, cfg.max_cells));
      RoundtripCat r = roundtrip_cat(F);
      if (r.iso)
        ++rep.passes;
      else
        rep.failures.push_back({i, r.reason, wrap("functor", to_json(F))});
    }
    return rep;
  }
  if (suite == "tensor-equivalence") {
    for (int i = 0; i < cases; ++i) {
      auto [v, u] = gen_prof_pair(case_config(cfg, i, cfg.max_cells));
      std::string detail;
      if (tensor_case_passes(v, u, detail))
        ++rep.passes;
      else
        rep.failures.push_back(
            {i, detail, Json::array({wrap("profunctor", to_json(v)), wrap("profunctor", to_json(u))})});
    }
    return rep;
  }
  if (suite == "gro-dcolim") {
    for (int i = 0; i < cases; ++i) {
      GenConfig ci = case_config(cfg, i, cfg.max_cells);
      int len = 1 + static_cast<int>(splitmix(ci.seed) % 2);
      CatDiagram D = gen_cat_diagram(ci, len);
      GroVsDcolim r = gro_vs_dcolim(D);
      if (r.iso)
        ++rep.passes;
      else
        rep.failures.push_back({i, r.reason, wrap("cat-diagram", to_json(D))});
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Json report_to_json(const SuiteReport& rep) {
  Json failures = Json::array();
  for (const CaseFailure& f : rep.failures)
    failures.push_back(
        Json{{"index", f.index}, {"detail", f.detail}, {"counterexample", f.counterexample}});
  return Json{{"suite", rep.suite},
              {"cases", rep.cases},
              {"passes", rep.passes},
              {"failures", failures}};
}

}  // namespace corrkit
