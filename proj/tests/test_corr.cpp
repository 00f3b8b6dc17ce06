#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrkit/corr.hpp"
#include "corrkit/mapsearch.hpp"

using namespace corrkit;

namespace {

// Delta^2 -> Delta^1 with vertex images 0,1,1: the running 1-correspondence
// with a point over 0 and an edge over 1.
SimplicialMap running_example() { return delta_map(codegeneracy(1, 1)); }

Correspondence running_corr() {
  FiberResult F = fiber(running_example(), SimplexRef{{}, 2});  // nondeg edge of Delta^1
  return F.corr;
}

void check_counts(SsetPtr X, std::vector<int> want) {
  for (int d = 0; d < static_cast<int>(want.size()); ++d)
    CHECK(X->count_cells_of_dim(d) == want[static_cast<size_t>(d)]);
  CHECK(X->dim() < static_cast<int>(want.size()));
}

}  // namespace

TEST_CASE("fiber of the identity is the simplex itself") {
  auto d2 = standard_simplex(2);
  FiberResult F = fiber(identity_map(d2), SimplexRef{{}, 6});  // the 2-cell
  CHECK(F.corr.n == 2);
  check_counts(F.corr.total, {3, 3, 1});
  CHECK(validate_corr(F.corr).ok());
  CHECK(is_iso(F.into_total).is_iso);
}

TEST_CASE("fibers of the running example") {
  SimplicialMap f = running_example();
  FiberResult over0 = fiber(f, SimplexRef{{}, 0});
  FiberResult over1 = fiber(f, SimplexRef{{}, 1});
  check_counts(over0.corr.total, {1});       // the point a
  check_counts(over1.corr.total, {2, 1});    // the edge b -> c
  Correspondence X = running_corr();
  check_counts(X.total, {3, 3, 1});          // all of Delta^2
  CHECK(validate_corr(X).ok());
}

TEST_CASE("corr_face deletes a fiber") {
  Correspondence X = running_corr();
  DerivedCorr d0 = corr_face(X, 0);
  check_counts(d0.corr.total, {2, 1});  // b -> c over a point
  CHECK(d0.corr.n == 0);
  DerivedCorr d1 = corr_face(X, 1);
  check_counts(d1.corr.total, {1});     // just a
  CHECK(validate_corr(d0.corr).ok());
  CHECK(validate_corr(d1.corr).ok());

  // deletion presentation agrees via the canonical comparison
  CHECK(face_by_deletion(X, 0).iso);
  CHECK(face_by_deletion(X, 1).iso);
}

TEST_CASE("corr_degeneracy of the running example") {
  Correspondence X = running_corr();
  DerivedCorr s0 = corr_degeneracy(X, 0);
  CHECK(s0.corr.n == 2);
  CHECK(validate_corr(s0.corr).ok());
  check_counts(s0.corr.total, {4, 6, 4, 1});  // a 3-simplex

  DerivedCorr s1 = corr_degeneracy(X, 1);
  CHECK(validate_corr(s1.corr).ok());
  check_counts(s1.corr.total, {5, 9, 7, 2});

  DeletionPresentation p0 = degeneracy_by_deletion(X, 0);
  DeletionPresentation p1 = degeneracy_by_deletion(X, 1);
  CHECK(p0.iso);
  CHECK(p1.iso);
  check_counts(p0.corr.total, {4, 6, 4, 1});
  check_counts(p1.corr.total, {5, 9, 7, 2});
}

TEST_CASE("degeneracy of a 0-correspondence is the cylinder") {
  auto Y = standard_simplex(1);
  DerivedCorr s0 = corr_degeneracy(trivial_corr(Y), 0);
  ProductResult cyl = product(Y, standard_simplex(1));
  for (int d = 0; d <= 2; ++d)
    CHECK(s0.corr.total->count_cells_of_dim(d) == cyl.object->count_cells_of_dim(d));
  CHECK(validate_corr(s0.corr).ok());
}

TEST_CASE("weak simplicial identities hold up to canonical iso") {
  for (int n = 0; n <= 2; ++n) {
    WeakIdentityReport rep = weak_simplicial_identities_check(delta_corr(n));
    INFO("n = " << n);
    for (const auto& s : rep.failures) INFO(s);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
  WeakIdentityReport rep = weak_simplicial_identities_check(running_corr());
  for (const auto& s : rep.failures) INFO(s);
  CHECK(rep.ok());

  // empty total space: vacuous but well-typed
  Correspondence E;
  E.total = empty_sset();
  E.n = 1;
  E.structure.source = E.total;
  E.structure.target = standard_simplex(1);
  CHECK(weak_simplicial_identities_check(E).ok());
}

TEST_CASE("cotabulator cocone and the hom bijection") {
  Correspondence X = running_corr();
  Cotab ct = cotabulator(X);
  CHECK(ct.object == X.total);
  CHECK(validate_map(ct.cocone).ok());
  CHECK(same_map(compose(ct.cylinder.proj1, ct.cocone), identity_map(X.total)));
  CHECK(same_map(compose(ct.cylinder.proj2, ct.cocone), X.structure));

  // |maps over Delta^n into Y x Delta^n| = |maps of totals into Y|
  VerticalMappingSpace V = vertical_mapping_space(standard_simplex(1), standard_simplex(1), 1);
  CHECK(V.bijection_ok);
  CHECK(V.maps.size() == function_complex_level(standard_simplex(1), standard_simplex(1), 1).size());
  VerticalMappingSpace V0 = vertical_mapping_space(standard_simplex(0), standard_simplex(2), 2);
  CHECK(V0.bijection_ok);
  CHECK(V0.maps.size() == enumerate_simplices(*standard_simplex(2), 2).size());
}

TEST_CASE("classifying diagram of the identity is tautological") {
  SimplicialMap f = identity_map(standard_simplex(1));
  CorrDiagram D = classifying_diagram(f);
  CHECK(validate_corr_diagram(D).ok());
  for (size_t k = 0; k < D.simplices.size(); ++k) {
    int m = ref_dim(*D.base, D.simplices[k]);
    // the fiber over an m-simplex of the identity is Delta^m
    CHECK(D.at[k].corr.total->count_cells_of_dim(0) == m + 1);
    CHECK(is_iso(D.at[k].corr.structure).is_iso);
  }
}

TEST_CASE("classifying diagram of the running example") {
  CorrDiagram D = classifying_diagram(running_example());
  CHECK(validate_corr_diagram(D).ok());
  check_counts(D.at[static_cast<size_t>(D.index.at(SimplexRef{{}, 0}))].corr.total, {1});
  check_counts(D.at[static_cast<size_t>(D.index.at(SimplexRef{{}, 1}))].corr.total, {2, 1});
  check_counts(D.at[static_cast<size_t>(D.index.at(SimplexRef{{}, 2}))].corr.total, {3, 3, 1});

  // diagram_act through an arbitrary operator agrees with generator composites
  SimplexRef edge{{}, 2};
  SimplicialMap a = diagram_act(D, edge, coface(0, 1));
  CHECK(validate_map(a).ok());
}

TEST_CASE("fiber commutes with faces and degeneracies of the base simplex") {
  SimplicialMap f = running_example();
  for (const SimplexRef& sigma : enumerate_simplices(*f.target, 1)) {
    FiberResult F = fiber(f, sigma);
    DerivedCorr R = DerivedCorr::root(F.corr);
    for (int i = 0; i <= 1; ++i) {
      // fiber over d_i sigma vs corr_face(fiber sigma, i)
      FiberResult Fd = fiber(f, face_of(*f.target, sigma, i));
      DerivedCorr D = R.face(i);
      auto toX = F.pb.mediate(Fd.into_total,
                              compose(delta_map(coface(i, 1)), Fd.corr.structure));
      REQUIRE(toX.has_value());
      auto cmp = D.mediate(*toX, Fd.corr.structure);
      REQUIRE(cmp.has_value());
      CHECK(is_iso(*cmp).is_iso);

      // fiber over s_i sigma vs corr_degeneracy(fiber sigma, i)
      FiberResult Fs = fiber(f, degeneracy_of(*f.target, sigma, i));
      DerivedCorr S = R.degeneracy(i);
      auto toX2 = F.pb.mediate(Fs.into_total,
                               compose(delta_map(codegeneracy(i, 1)), Fs.corr.structure));
      REQUIRE(toX2.has_value());
      auto cmp2 = S.mediate(*toX2, Fs.corr.structure);
      REQUIRE(cmp2.has_value());
      CHECK(is_iso(*cmp2).is_iso);
    }
  }
}

TEST_CASE("double colimit recovers the source: identity and running example") {
  RoundtripResult r1 = roundtrip_check(identity_map(standard_simplex(2)));
  CHECK(r1.iso);
  RoundtripResult r2 = roundtrip_check(running_example());
  INFO(r2.reason);
  CHECK(r2.iso);
}

TEST_CASE("roundtrip on the boundary restriction") {
  SimplicialMap f = compose(running_example(), sub_delta_inclusion(boundary(2), 2));
  RoundtripResult r = roundtrip_check(f);
  INFO(r.reason);
  CHECK(r.iso);
}

TEST_CASE("double colimit is stable under raising the truncation") {
  SimplicialMap f = running_example();
  RoundtripResult a = roundtrip_check(f);
  RoundtripResult b = roundtrip_check(f, f.target->dim() + 2);
  CHECK(a.iso);
  CHECK(b.iso);
  for (int d = 0; d <= 2; ++d)
    CHECK(a.comparison.source->count_cells_of_dim(d) == b.comparison.source->count_cells_of_dim(d));
}

TEST_CASE("dcolim of a diagram over disjoint points is the coproduct") {
  PushoutResult D = disjoint_union(standard_simplex(1), standard_simplex(2));
  RoundtripResult r = roundtrip_check(terminal_map(D.object));
  CHECK(r.iso);
}
