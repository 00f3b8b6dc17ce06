#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrkit/sset_colim.hpp"

using namespace corrkit;

TEST_CASE("product of simplices: cell counts and levelwise cardinality") {
  ProductResult P = product(standard_simplex(1), standard_simplex(1));
  CHECK(P.object->count_cells_of_dim(0) == 4);
  CHECK(P.object->count_cells_of_dim(1) == 5);
  CHECK(P.object->count_cells_of_dim(2) == 2);
  CHECK(validate_sset(*P.object).ok());
  CHECK(validate_map(P.proj1).ok());
  CHECK(validate_map(P.proj2).ok());

  // |(X x Y)_n| = |X_n| * |Y_n|
  auto X = standard_simplex(2);
  auto Y = standard_simplex(1);
  ProductResult Q = product(X, Y);
  CHECK(validate_sset(*Q.object).ok());
  for (int n = 0; n <= 4; ++n) {
    size_t want = enumerate_simplices(*X, n).size() * enumerate_simplices(*Y, n).size();
    CHECK(enumerate_simplices(*Q.object, n).size() == want);
  }
}

TEST_CASE("product simplices act componentwise") {
  auto X = standard_simplex(2);
  auto Y = standard_simplex(1);
  ProductResult P = product(X, Y);
  for (int n = 0; n <= 3; ++n) {
    for (const SimplexRef& a : enumerate_simplices(*X, n))
      for (const SimplexRef& b : enumerate_simplices(*Y, n)) {
        SimplexRef p = P.pair_ref(a, b);
        CHECK(apply(P.proj1, p) == a);
        CHECK(apply(P.proj2, p) == b);
        for (const Monotone& th : all_monotone(std::max(0, n - 1), n)) {
          SimplexRef lhs = act(*P.object, p, th);
          SimplexRef rhs = P.pair_ref(act(*X, a, th), act(*Y, b, th));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("into_product: diagonal composes to identities") {
  auto X = standard_simplex(1);
  ProductResult P = product(X, X);
  SimplicialMap diag = into_product(P, identity_map(X), identity_map(X));
  CHECK(validate_map(diag).ok());
  CHECK(same_map(compose(P.proj1, diag), identity_map(X)));
  CHECK(same_map(compose(P.proj2, diag), identity_map(X)));
}

TEST_CASE("pullback along the terminal map is the product") {
  auto X = standard_simplex(2);
  auto Y = standard_simplex(1);
  PullbackResult PB = pullback(terminal_map(X), terminal_map(Y));
  ProductResult P = product(X, Y);
  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate_simplices(*PB.object, n).size() == enumerate_simplices(*P.object, n).size());
  CHECK(validate_sset(*PB.object).ok());
  CHECK(same_map(compose(terminal_map(X), PB.p1), compose(terminal_map(Y), PB.p2)));
}

TEST_CASE("pullback of the identity span is the diagonal") {
  auto X = standard_simplex(2);
  PullbackResult PB = pullback(identity_map(X), identity_map(X));
  IsoWitness w = is_iso(PB.p1);
  CHECK(w.is_iso);
  CHECK(same_map(PB.p1, PB.p2));
}

TEST_CASE("pullback mediate: cone checks and universal property") {
  // fiber of sigma_0 : Delta^2 -> Delta^1 over the vertex 0
  SimplicialMap p = delta_map(codegeneracy(0, 1));
  auto pt = standard_simplex(0);
  SimplicialMap v0 = delta_map(Monotone{{0}, 1});
  PullbackResult F = pullback(p, v0);
  // the fiber over 0 is the edge 0->1 of Delta^2
  CHECK(F.object->count_cells_of_dim(0) == 2);
  CHECK(F.object->count_cells_of_dim(1) == 1);
  CHECK(F.object->count_cells_of_dim(2) == 0);

  // a commuting cone from Delta^0 mediates; a broken one does not
  SimplicialMap c0 = delta_map(Monotone{{0}, 2});  // vertex 0 of Delta^2
  SimplicialMap c2 = delta_map(Monotone{{2}, 2});  // vertex 2, over 1
  auto m = F.mediate(c0, identity_map(pt));
  REQUIRE(m.has_value());
  CHECK(validate_map(*m).ok());
  CHECK(same_map(compose(F.p1, *m), c0));
  CHECK(!F.mediate(c2, identity_map(pt)).has_value());
}

TEST_CASE("pushout: two triangles glued along an edge") {
  auto d2 = standard_simplex(2);
  auto d1 = standard_simplex(1);
  SimplicialMap e = delta_map(coface(1, 2));  // edge 0->2, i.e. d_1
  PushoutResult P = pushout(e, e);
  CHECK(P.object->count_cells_of_dim(0) == 4);
  CHECK(P.object->count_cells_of_dim(1) == 5);
  CHECK(P.object->count_cells_of_dim(2) == 2);
  CHECK(validate_sset(*P.object).ok());
  CHECK(validate_map(P.inj1).ok());
  CHECK(validate_map(P.inj2).ok());
  // the cocone commutes
  CHECK(same_map(compose(P.inj1, e), compose(P.inj2, e)));

  // induce: fold both triangles back onto Delta^2
  SimplicialMap fold = P.colim.induce({e, identity_map(d2), identity_map(d2)});
  CHECK(validate_map(fold).ok());
  CHECK(same_map(compose(fold, P.inj1), identity_map(d2)));
  CHECK(same_map(compose(fold, P.inj2), identity_map(d2)));
  (void)d1;
}

TEST_CASE("quotients: circle and 2-sphere") {
  // Delta^1 / boundary: one vertex, one nondegenerate edge
  SimplicialMap i1 = sub_delta_inclusion(boundary(1), 1);
  PushoutResult circle = pushout(i1, terminal_map(boundary(1)));
  CHECK(circle.object->count_cells_of_dim(0) == 1);
  CHECK(circle.object->count_cells_of_dim(1) == 1);
  CHECK(validate_sset(*circle.object).ok());

  // Delta^2 / boundary: one vertex, no edges, one triangle
  SimplicialMap i2 = sub_delta_inclusion(boundary(2), 2);
  PushoutResult sphere = pushout(i2, terminal_map(boundary(2)));
  CHECK(sphere.object->count_cells_of_dim(0) == 1);
  CHECK(sphere.object->count_cells_of_dim(1) == 0);
  CHECK(sphere.object->count_cells_of_dim(2) == 1);
  CHECK(validate_sset(*sphere.object).ok());
  CHECK(validate_map(sphere.inj1).ok());
}

TEST_CASE("disjoint union") {
  PushoutResult D = disjoint_union(standard_simplex(1), standard_simplex(2));
  CHECK(D.object->count_cells_of_dim(0) == 5);
  CHECK(D.object->count_cells_of_dim(1) == 4);
  CHECK(D.object->count_cells_of_dim(2) == 1);
  CHECK(validate_sset(*D.object).ok());
  SimplicialMap fold = D.colim.induce(
      {delta_map(mono_from_image({0, 1}, 2)), identity_map(standard_simplex(2))});
  CHECK(validate_map(fold).ok());
}

TEST_CASE("colimit of a coequalizer-style diagram") {
  // two parallel endpoint inclusions Delta^0 => Delta^1 coequalize to a circle
  SsetDiagram d;
  d.objects = {standard_simplex(0), standard_simplex(1)};
  d.arrows.push_back({0, 1, delta_map(coface(1, 1))});  // vertex 0
  d.arrows.push_back({0, 1, delta_map(coface(0, 1))});  // vertex 1
  CHECK(validate_diagram(d).ok());
  ColimitResult C = colimit(d);
  CHECK(C.object->count_cells_of_dim(0) == 1);
  CHECK(C.object->count_cells_of_dim(1) == 1);
  CHECK(validate_sset(*C.object).ok());
  for (const auto& inj : C.injections) CHECK(validate_map(inj).ok());
  for (const auto& a : d.arrows)
    CHECK(same_map(compose(C.injections[static_cast<size_t>(a.tgt)], a.map),
                   C.injections[static_cast<size_t>(a.src)]));
}
