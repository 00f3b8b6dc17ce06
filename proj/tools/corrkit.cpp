#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "corrkit/fib.hpp"
#include "corrkit/mapsearch.hpp"
#include "corrkit/proptest.hpp"
#include "corrkit/workspace.hpp"

using namespace corrkit;

namespace {

struct Options {
  std::string format = "summary";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  int max_dim = 3;
};

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("$", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Json load_kind(const std::string& path, const std::string& kind) {
  auto [k, value] = unwrap(load(path));
  if (k != kind) throw ParseError("$.kind", "expected '" + kind + "', got '" + k + "'");
  return value;
}

// A map file whose target must be a standard simplex; returns its dimension.
std::pair<SimplicialMap, int> load_corr_map(const std::string& path) {
  SimplicialMap f = map_from_json(load_kind(path, "map"));
  int n = f.target->dim();
  if (n < 0 || canonical(to_json(*f.target)) != canonical(to_json(*standard_simplex(n))))
    throw ParseError("$.target", "expected the standard simplex Delta^" + std::to_string(std::max(n, 0)));
  f.target = standard_simplex(n);  // share the memoized object
  return {f, n};
}

Json sset_counts(const SimplicialSet& X) {
  Json counts = Json::array();
  for (int d = 0; d <= X.dim(); ++d) counts.push_back(X.count_cells_of_dim(d));
  return counts;
}

void emit(const Options& opt, const Json& j, const std::string& summary) {
  if (opt.format == "json")
    std::cout << canonical(j) << "\n";
  else
    std::cout << summary << "\n";
}

std::string counts_text(const SimplicialSet& X) {
  std::string out = "cells per dim:";
  for (int d = 0; d <= X.dim(); ++d) out += " " + std::to_string(X.count_cells_of_dim(d));
  return X.dim() < 0 ? "empty" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite simplicial sets, correspondences, and profunctors"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "summary"}));
  app.add_option("--budget", opt.budget, "enumeration budget")->envname("CORRKIT_BUDGET");
  app.add_option("--seed", opt.seed, "generator seed");
  app.add_option("--max-dim", opt.max_dim, "generator dimension bound");

  std::string file, file2, method = "coend", kind = "sset", suite;
  int index = 0, vertex = 0, up_to = 3, over_n = 1, cases = 20, max_n = -1, chain_len = 1;

  CLI::App* validate = app.add_subcommand("validate", "validate a wrapped value");
  validate->add_option("file", file)->required();

  CLI::App* fiber_cmd = app.add_subcommand("fiber", "fiber of a map over a base vertex");
  fiber_cmd->add_option("file", file)->required();
  fiber_cmd->add_option("--vertex", vertex, "base vertex");

  CLI::App* face_cmd = app.add_subcommand("face", "face correspondence d_i");
  face_cmd->add_option("file", file)->required();
  face_cmd->add_option("--index", index, "face index");

  CLI::App* degen_cmd = app.add_subcommand("degeneracy", "degeneracy correspondence s_i");
  degen_cmd->add_option("file", file)->required();
  degen_cmd->add_option("--index", index, "degeneracy index");

  CLI::App* cotab_cmd = app.add_subcommand("cotab", "cotabulator of a correspondence");
  cotab_cmd->add_option("file", file)->required();

  CLI::App* dcolim_cmd = app.add_subcommand("dcolim", "double colimit of the classifying diagram");
  dcolim_cmd->add_option("file", file)->required();

  CLI::App* roundtrip_cmd = app.add_subcommand("roundtrip", "double colimit recovers the source");
  roundtrip_cmd->add_option("file", file)->required();

  CLI::App* quasi_cmd = app.add_subcommand("is-quasicat", "inner horn filling check");
  quasi_cmd->add_option("file", file)->required();
  quasi_cmd->add_option("--max-n", max_n, "largest horn dimension");

  CLI::App* inner_cmd = app.add_subcommand("is-inner-fib", "inner fibration check");
  inner_cmd->add_option("file", file)->required();

  CLI::App* fiberwise_cmd = app.add_subcommand("fiberwise", "direct vs fiberwise agreement");
  fiberwise_cmd->add_option("file", file)->required();

  CLI::App* nerve_cmd = app.add_subcommand("nerve", "nerve of a finite category");
  nerve_cmd->add_option("file", file)->required();
  nerve_cmd->add_option("--up-to", up_to, "truncation dimension");

  CLI::App* prof_cmd = app.add_subcommand("prof", "profunctor operations");
  prof_cmd->require_subcommand(1);
  CLI::App* collage_cmd = prof_cmd->add_subcommand("collage", "collage category over [1]");
  collage_cmd->add_option("file", file)->required();
  CLI::App* tensor_cmd = prof_cmd->add_subcommand("tensor", "composite v (x) u");
  tensor_cmd->add_option("vfile", file)->required();
  tensor_cmd->add_option("ufile", file2)->required();
  tensor_cmd->add_option("--method", method)->check(CLI::IsMember({"coend", "geometric"}));
  CLI::App* companion_cmd = prof_cmd->add_subcommand("companion", "companion of a functor");
  companion_cmd->add_option("file", file)->required();

  CLI::App* gro_cmd = app.add_subcommand("gro", "Grothendieck construction");
  gro_cmd->add_option("file", file)->required();

  CLI::App* gvd_cmd = app.add_subcommand("gro-vs-dcolim", "compare Gro with the double colimit");
  gvd_cmd->add_option("file", file)->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "seeded random instance");
  gen_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"sset", "map", "category", "functor", "cat-diagram", "profunctor"}));
  gen_cmd->add_option("--over", over_n, "base dimension for --kind map");
  gen_cmd->add_option("--chain", chain_len, "base length for --kind cat-diagram");

  CLI::App* proptest_cmd = app.add_subcommand("proptest", "run a property suite");
  proptest_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  proptest_cmd->add_option("--cases", cases, "number of cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      auto [k, value] = unwrap(load(file));
      Workspace ws;
      std::string id = ws.insert(k, value);
      emit(opt, Json{{"ok", true}, {"kind", k}, {"id", id}}, k + " ok, id " + id);
      return 0;
    }
    if (fiber_cmd->parsed()) {
      auto [f, n] = load_corr_map(file);
      if (vertex < 0 || vertex > n) throw ParseError("$", "vertex out of range");
      FiberResult r = fiber(f, SimplexRef{{}, standard_cell_id(n, {vertex})});
      emit(opt, Json{{"counts", sset_counts(*r.corr.total)}}, counts_text(*r.corr.total));
      return 0;
    }
    if (face_cmd->parsed() || degen_cmd->parsed()) {
      auto [f, n] = load_corr_map(file);
      Correspondence X{f.source, n, f};
      DeletionPresentation d =
          face_cmd->parsed() ? face_by_deletion(X, index) : degeneracy_by_deletion(X, index);
      emit(opt,
           Json{{"counts", sset_counts(*d.corr.total)}, {"iso_with_pullback", d.iso}},
           counts_text(*d.corr.total) + (d.iso ? " (pullback route agrees)" : " (MISMATCH)"));
      return d.iso ? 0 : 1;
    }
    if (cotab_cmd->parsed()) {
      auto [f, n] = load_corr_map(file);
      Cotab c = cotabulator(Correspondence{f.source, n, f});
      emit(opt, Json{{"counts", sset_counts(*c.object)}}, counts_text(*c.object));
      return 0;
    }
    if (dcolim_cmd->parsed()) {
      auto [f, n] = load_corr_map(file);
      (void)n;
      DoubleColimit dc = double_colimit(classifying_diagram(f));
      emit(opt, Json{{"counts", sset_counts(*dc.object)}}, counts_text(*dc.object));
      return 0;
    }
    if (roundtrip_cmd->parsed()) {
      auto [f, n] = load_corr_map(file);
      (void)n;
      RoundtripResult r = roundtrip_check(f);
      emit(opt, Json{{"iso", r.iso}, {"reason", r.reason}},
           r.iso ? "roundtrip: iso" : "roundtrip: FAILED (" + r.reason + ")");
      return r.iso ? 0 : 1;
    }
    if (quasi_cmd->parsed()) {
      SsetPtr X = sset_from_json(load_kind(file, "sset"));
      FibrationReport rep = is_quasi_category(X, max_n, opt.budget);
      Json failures = Json::array();
      for (const HornProblem& p : rep.failures)
        failures.push_back(Json{{"n", p.n}, {"k", p.k}});
      emit(opt,
           Json{{"verdict", rep.verdict},
                {"budget_exhausted", rep.budget_exhausted},
                {"failures", failures}},
           rep.verdict ? "quasi-category: yes"
                       : (rep.budget_exhausted ? "quasi-category: budget exhausted"
                                               : "quasi-category: no"));
      return rep.verdict ? 0 : 1;
    }
    if (inner_cmd->parsed() || fiberwise_cmd->parsed()) {
      SimplicialMap f = map_from_json(load_kind(file, "map"));
      if (inner_cmd->parsed()) {
        FibrationReport rep = is_inner_fibration(f, -1, opt.budget);
        emit(opt, Json{{"verdict", rep.verdict}, {"budget_exhausted", rep.budget_exhausted}},
             rep.verdict ? "inner fibration: yes" : "inner fibration: no");
        return rep.verdict ? 0 : 1;
      }
      FiberwiseResult r = fiberwise_criterion(f);
      emit(opt,
           Json{{"inner_fibration", r.inner_fibration},
                {"fibers_pass", r.fibers_pass},
                {"agreement", r.agreement}},
           r.agreement ? "fiberwise criterion: checkers agree"
                       : "fiberwise criterion: DISAGREEMENT");
      return r.agreement ? 0 : 1;
    }
    if (nerve_cmd->parsed()) {
      CatPtr C = cat_from_json(load_kind(file, "category"));
      SsetPtr N = nerve(C, up_to);
      if (opt.format == "json")
        std::cout << canonical(wrap("sset", to_json(*N))) << "\n";
      else
        std::cout << counts_text(*N) << "\n";
      return 0;
    }
    if (collage_cmd->parsed()) {
      CollageResult col = collage(prof_from_json(load_kind(file, "profunctor")));
      emit(opt, Json{{"category", to_json(*col.total)}},
           "collage: " + std::to_string(col.total->num_objects) + " objects, " +
               std::to_string(col.total->num_arrows()) + " arrows");
      return 0;
    }
    if (tensor_cmd->parsed()) {
      Profunctor v = prof_from_json(load_kind(file, "profunctor"));
      Profunctor u = prof_from_json(load_kind(file2, "profunctor"));
      TensorResult t = method == "coend" ? tensor_coend(v, u) : tensor_geometric(v, u);
      emit(opt, wrap("profunctor", to_json(t.prof)),
           "tensor (" + method + "): " + std::to_string(t.prof.elems.size()) + " elements");
      return 0;
    }
    if (companion_cmd->parsed()) {
      CompanionResult c = companion(functor_from_json(load_kind(file, "functor")));
      emit(opt, wrap("profunctor", to_json(c.prof)),
           "companion: " + std::to_string(c.prof.elems.size()) + " elements");
      return 0;
    }
    if (gro_cmd->parsed()) {
      GrothendieckResult g = grothendieck(cat_diagram_from_json(load_kind(file, "cat-diagram")));
      GroFibrationReport rep = is_grothendieck_fibration(g.proj);
      emit(opt,
           Json{{"total", to_json(*g.total)}, {"fibration", rep.verdict}},
           "gro: " + std::to_string(g.total->num_objects) + " objects, " +
               std::to_string(g.total->num_arrows()) + " arrows, fibration: " +
               (rep.verdict ? "yes" : "no"));
      return 0;
    }
    if (gvd_cmd->parsed()) {
      GroVsDcolim r = gro_vs_dcolim(cat_diagram_from_json(load_kind(file, "cat-diagram")));
      emit(opt, Json{{"iso", r.iso}, {"reason", r.reason}},
           r.iso ? "gro vs dcolim: iso" : "gro vs dcolim: FAILED (" + r.reason + ")");
      return r.iso ? 0 : 1;
    }
    if (gen_cmd->parsed()) {
      GenConfig cfg;
      cfg.seed = opt.seed;
      cfg.max_dim = opt.max_dim;
      Json out;
      if (kind == "sset") out = wrap("sset", to_json(*gen_sset(cfg)));
      if (kind == "map") out = wrap("map", to_json(gen_map_over(cfg, over_n)));
      if (kind == "category") out = wrap("category", to_json(*gen_category(cfg)));
      if (kind == "functor") out = wrap("functor", to_json(gen_functor(cfg)));
      if (kind == "cat-diagram") out = wrap("cat-diagram", to_json(gen_cat_diagram(cfg, chain_len)));
      if (kind == "profunctor") {
        auto [v, u] = gen_prof_pair(cfg);
        (void)v;
        out = wrap("profunctor", to_json(u));
      }
      std::cout << canonical(out) << "\n";
      return 0;
    }
    if (proptest_cmd->parsed()) {
      GenConfig cfg;
      cfg.seed = opt.seed;
      cfg.max_dim = opt.max_dim;
      SuiteReport rep = run_suite(suite, cases, cfg);
      if (opt.format == "json")
        std::cout << canonical(report_to_json(rep)) << "\n";
      else {
        std::cout << rep.suite << ": " << rep.passes << "/" << rep.cases << " passed\n";
        for (const CaseFailure& cf : rep.failures)
          std::cout << "  case " << cf.index << ": " << cf.detail << "\n    "
                    << canonical(cf.counterexample) << "\n";
      }
      return rep.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
