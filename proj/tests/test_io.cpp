#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corrkit/gen.hpp"
#include "corrkit/workspace.hpp"

using namespace corrkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("serialization roundtrips byte-identically for every kind") {
  GenConfig cfg;
  for (std::uint64_t s = 0; s < 8; ++s) {
    std::string x = canonical(to_json(*gen_sset(cfg.with_seed(s))));
    CHECK(canonical(to_json(*sset_from_json(parse_text(x)))) == x);

    std::string f = canonical(to_json(gen_map_over(cfg.with_seed(s), 2)));
    CHECK(canonical(to_json(map_from_json(parse_text(f)))) == f);

    std::string c = canonical(to_json(*gen_category(cfg.with_seed(s))));
    CHECK(canonical(to_json(*cat_from_json(parse_text(c)))) == c);

    std::string F = canonical(to_json(gen_functor(cfg.with_seed(s))));
    CHECK(canonical(to_json(functor_from_json(parse_text(F)))) == F);

    auto [v, u] = gen_prof_pair(cfg.with_seed(s));
    std::string uj = canonical(to_json(u));
    CHECK(canonical(to_json(prof_from_json(parse_text(uj)))) == uj);
    std::string vj = canonical(to_json(v));
    CHECK(canonical(to_json(prof_from_json(parse_text(vj)))) == vj);

    std::string D = canonical(to_json(gen_cat_diagram(cfg.with_seed(s), 2)));
    CHECK(canonical(to_json(cat_diagram_from_json(parse_text(D)))) == D);
  }
}

TEST_CASE("parsed values pass their validators") {
  GenConfig cfg;
  cfg.seed = 11;
  CHECK(validate_sset(*sset_from_json(to_json(*gen_sset(cfg)))).ok());
  CHECK(validate_map(map_from_json(to_json(gen_map_over(cfg, 1)))).ok());
  CHECK(validate_cat(*cat_from_json(to_json(*gen_category(cfg)))).ok());
  CHECK(validate_functor(functor_from_json(to_json(gen_functor(cfg)))).ok());
  CHECK(validate_cat_diagram(cat_diagram_from_json(to_json(gen_cat_diagram(cfg, 1)))).ok());
}

TEST_CASE("malformed input produces path-precise diagnostics") {
  CHECK_THROWS_AS(parse_text("{not json"), ParseError);

  // wrong face arity names the offending cell
  try {
    sset_from_json(parse_text(R"({"cells":[{"dim":1,"faces":[]}]})"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path == "$.cells[0].faces");
    CHECK(std::string(e.what()).find("cell 0 of dimension 1 needs 2 faces, got 0") !=
          std::string::npos);
  }

  // missing keys and wrong types carry the path of the failure
  try {
    map_from_json(parse_text(R"({"source":{"cells":[]}})"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path.rfind("$", 0) == 0);
  }
  try {
    sset_from_json(parse_text(R"({"cells":[{"dim":"zero","faces":[]}]})"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path == "$.cells[0].dim");
  }

  // structurally well-formed but invalid values are rejected too
  CHECK_THROWS_AS(
      cat_from_json(parse_text(
          R"({"objects":1,"arrows":[{"src":0,"tgt":0,"label":"id"}],"ids":[0],"comp":[]})")),
      ParseError);

  // envelope errors
  CHECK_THROWS_AS(unwrap(parse_text(R"({"value":{}})")), ParseError);
  CHECK_THROWS_AS(unwrap(parse_text(R"([1,2])")), ParseError);
}

TEST_CASE("workspace stores validated values under stable content ids") {
  GenConfig cfg;
  cfg.seed = 5;
  Json x = to_json(*gen_sset(cfg));
  Workspace ws;
  std::string id = ws.insert("sset", x, "mine");
  CHECK(id == content_id("sset", x));
  CHECK(id == ws.insert("sset", x));  // idempotent
  CHECK(ws.size() == 1);
  CHECK(ws.at(id).kind == "sset");
  CHECK(ws.id_of("mine") == id);
  CHECK(!ws.id_of("other").has_value());

  Json f = to_json(gen_map_over(cfg, 1));
  std::string fid = ws.insert("map", f);
  CHECK(fid != id);
  CHECK(ws.size() == 2);

  CHECK_THROWS_AS(ws.insert("no-such-kind", x), ParseError);
  CHECK_THROWS_AS(ws.insert("map", x), ParseError);  // sset body under map kind
  CHECK(ws.size() == 2);
}

TEST_CASE("the checked-in fixture is canonical and reproduces its invariants") {
  std::string text = read_file(FIXTURE_DIR "/delta2_over_delta1.json");
  Json j = parse_text(text);
  CHECK(canonical(j) == strip(text));

  auto [kind, value] = unwrap(j);
  CHECK(kind == "map");
  SimplicialMap f = map_from_json(value);
  CHECK(validate_map(f).ok());
  CHECK(same_map(f, delta_map(codegeneracy(1, 1))));

  f.target = standard_simplex(1);
  FiberResult f0 = fiber(f, SimplexRef{{}, standard_cell_id(1, {0})});
  CHECK(f0.corr.total->num_cells() == 1);
  FiberResult f1 = fiber(f, SimplexRef{{}, standard_cell_id(1, {1})});
  CHECK(f1.corr.total->count_cells_of_dim(0) == 2);
  CHECK(f1.corr.total->count_cells_of_dim(1) == 1);
}
