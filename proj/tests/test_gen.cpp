#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrkit/proptest.hpp"

using namespace corrkit;

TEST_CASE("generated simplicial sets are valid and deterministic") {
  GenConfig cfg;
  for (std::uint64_t s = 0; s < 20; ++s) {
    SsetPtr X = gen_sset(cfg.with_seed(s));
    CHECK(validate_sset(*X).ok());
    CHECK(X->dim() <= cfg.max_dim);
  }
  CHECK(canonical(to_json(*gen_sset(cfg.with_seed(7)))) ==
        canonical(to_json(*gen_sset(cfg.with_seed(7)))));
  CHECK(canonical(to_json(*gen_sset(cfg.with_seed(7)))) !=
        canonical(to_json(*gen_sset(cfg.with_seed(8)))));
}

TEST_CASE("a one-cell budget yields a point") {
  GenConfig cfg;
  cfg.max_cells = 1;
  for (std::uint64_t s = 0; s < 5; ++s) {
    SsetPtr X = gen_sset(cfg.with_seed(s));
    CHECK(X->num_cells() == 1);
    CHECK(validate_sset(*X).ok());
  }
}

TEST_CASE("generated maps over standard simplices are valid") {
  GenConfig cfg;
  cfg.max_cells = 12;
  for (std::uint64_t s = 0; s < 15; ++s)
    for (int n = 0; n <= 3; ++n) {
      SimplicialMap f = gen_map_over(cfg.with_seed(s), n);
      CHECK(validate_map(f).ok());
      CHECK(f.target == standard_simplex(n));
    }
  CHECK(canonical(to_json(gen_map_over(cfg.with_seed(3), 2))) ==
        canonical(to_json(gen_map_over(cfg.with_seed(3), 2))));
}

TEST_CASE("generated categories, functors, and diagrams are valid") {
  GenConfig cfg;
  for (std::uint64_t s = 0; s < 15; ++s) {
    CatPtr C = gen_category(cfg.with_seed(s));
    CHECK(validate_cat(*C).ok());
    CHECK(C->num_objects <= cfg.max_objects);
    CHECK(C->num_arrows() <= cfg.max_arrows);
    CHECK(validate_functor(gen_functor(cfg.with_seed(s))).ok());
    CHECK(validate_cat_diagram(gen_cat_diagram(cfg.with_seed(s), 2)).ok());
  }
  GenConfig poset = cfg, fre = cfg;
  poset.strategy = "poset";
  fre.strategy = "free";
  CHECK(validate_cat(*gen_category(poset)).ok());
  CHECK(validate_cat(*gen_category(fre)).ok());
}

TEST_CASE("generated profunctors are valid with trivial one-object case") {
  GenConfig cfg;
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto [v, u] = gen_prof_pair(cfg.with_seed(s));
    CHECK(validate_prof(u).ok());
    CHECK(validate_prof(v).ok());
    CHECK(u.tgt == v.src);
  }
  Profunctor t = gen_profunctor(cfg, terminal_category(), terminal_category());
  CHECK(validate_prof(t).ok());
  for (const auto& [key, r] : t.lact) CHECK(key.second == r);
}

TEST_CASE("small suite runs pass and serialize deterministically") {
  GenConfig cfg;
  cfg.seed = 42;
  for (const std::string& name : suite_names()) {
    SuiteReport rep = run_suite(name, 4, cfg);
    CHECK(rep.ok());
    CHECK(rep.cases == 4);
  }
  CHECK(canonical(report_to_json(run_suite("roundtrip-sset", 3, cfg))) ==
        canonical(report_to_json(run_suite("roundtrip-sset", 3, cfg))));
  CHECK_THROWS_AS(run_suite("no-such-suite", 1, cfg), std::invalid_argument);
}
