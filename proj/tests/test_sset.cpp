#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corrkit/sset.hpp"

using namespace corrkit;

namespace {

// Oracle: number of monotone surjections [n] ->> [m], by brute force over
// value tables.
long count_surjections(int n, int m) {
  long count = 0;
  std::vector<int> vals(static_cast<size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos > n) {
      std::set<int> img(vals.begin(), vals.end());
      if (static_cast<int>(img.size()) == m + 1 && *img.begin() == 0 && *img.rbegin() == m)
        ++count;
      return;
    }
    for (int v = low; v <= m; ++v) {
      vals[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return count;
}

OperatorWord ops(int dim, std::vector<OperatorSymbol> v) { return OperatorWord{dim, std::move(v)}; }

}  // namespace

TEST_CASE("standard simplices, horns, boundaries have the right cells") {
  auto d2 = standard_simplex(2);
  CHECK(d2->count_cells_of_dim(0) == 3);
  CHECK(d2->count_cells_of_dim(1) == 3);
  CHECK(d2->count_cells_of_dim(2) == 1);
  CHECK(validate_sset(*d2).ok());

  auto h = horn(2, 1);
  CHECK(h->count_cells_of_dim(0) == 3);
  CHECK(h->count_cells_of_dim(1) == 2);
  CHECK(h->count_cells_of_dim(2) == 0);
  CHECK(validate_sset(*h).ok());

  auto b3 = boundary(3);
  CHECK(b3->count_cells_of_dim(0) == 4);
  CHECK(b3->count_cells_of_dim(1) == 6);
  CHECK(b3->count_cells_of_dim(2) == 4);
  CHECK(b3->count_cells_of_dim(3) == 0);
  CHECK(validate_sset(*b3).ok());

  CHECK(validate_sset(*empty_sset()).ok());
}

TEST_CASE("normalize_word canonical forms") {
  // d_i s_i = identity
  OperatorWord w1 = ops(1, {{OperatorSymbol::Degeneracy, 1}, {OperatorSymbol::Face, 1}});
  CHECK(normalize_word(w1).ops.empty());

  // s_1 then d_0 equals d_0 then s_0 (the identity d_0 s_1 = s_0 d_0)
  OperatorWord w2 = ops(1, {{OperatorSymbol::Degeneracy, 1}, {OperatorSymbol::Face, 0}});
  OperatorWord expect2 = ops(1, {{OperatorSymbol::Face, 0}, {OperatorSymbol::Degeneracy, 0}});
  CHECK(normalize_word(w2) == normalize_word(expect2));
  CHECK(normalize_word(w2).ops == expect2.ops);

  // d_3 then d_1 equals d_1 then d_2 (the identity d_1 d_3 = d_2 d_1)
  OperatorWord w3 = ops(3, {{OperatorSymbol::Face, 3}, {OperatorSymbol::Face, 1}});
  OperatorWord expect3 = ops(3, {{OperatorSymbol::Face, 3}, {OperatorSymbol::Face, 1}});
  CHECK(normalize_word(w3).ops == expect3.ops);
  OperatorWord w3b = ops(3, {{OperatorSymbol::Face, 1}, {OperatorSymbol::Face, 2}});
  CHECK(operator_word_to_monotone(w3) == operator_word_to_monotone(w3b));
  CHECK(normalize_word(w3b).ops == expect3.ops);

  CHECK_THROWS(operator_word_to_monotone(ops(1, {{OperatorSymbol::Face, 2}})));
}

TEST_CASE("normalize_word equals words iff the monotone maps are equal") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 500; ++it) {
    int dim = 1 + static_cast<int>(rng() % 3);
    OperatorWord w{dim, {}};
    int cur = dim;
    int len = static_cast<int>(rng() % 5);
    bool fine = true;
    for (int t = 0; t < len; ++t) {
      bool face = (rng() % 2) == 0 && cur >= 1;
      int idx = static_cast<int>(rng() % static_cast<unsigned>(cur + 1));
      w.ops.push_back({face ? OperatorSymbol::Face : OperatorSymbol::Degeneracy, idx});
      cur += face ? -1 : 1;
      if (cur < 0) fine = false;
    }
    if (!fine) continue;
    OperatorWord n1 = normalize_word(w);
    CHECK(operator_word_to_monotone(n1) == operator_word_to_monotone(w));
    CHECK(normalize_word(n1) == n1);  // idempotent
  }
}

TEST_CASE("enumerate_simplices matches the surjection-count oracle") {
  auto d0 = standard_simplex(0);
  CHECK(enumerate_simplices(*d0, 5).size() == 1);

  auto d1 = standard_simplex(1);
  CHECK(enumerate_simplices(*d1, 1).size() == 3);

  auto d2 = standard_simplex(2);
  long expect = 3 * count_surjections(3, 0) + 3 * count_surjections(3, 1) +
                1 * count_surjections(3, 2);
  CHECK(expect == 15);
  CHECK(static_cast<long>(enumerate_simplices(*d2, 3).size()) == expect);

  for (int n = 0; n <= 4; ++n) {
    long want = 0;
    for (int m = 0; m <= 2; ++m)
      want += d2->count_cells_of_dim(m) * count_surjections(n, m);
    CHECK(static_cast<long>(enumerate_simplices(*d2, n).size()) == want);
  }
}

TEST_CASE("act: Eilenberg-Zilber round-trip and simplicial identities") {
  auto d3 = standard_simplex(3);
  for (int n = 0; n <= 4; ++n) {
    for (const SimplexRef& x : enumerate_simplices(*d3, n)) {
      // re-normalizing through the identity operator is the identity
      CHECK(act(*d3, x, identity_mono(n)) == x);
      // d_i d_j = d_{j-1} d_i through act, on every simplex
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i) {
          SimplexRef lhs = face_of(*d3, face_of(*d3, x, j), i);
          SimplexRef rhs = face_of(*d3, face_of(*d3, x, i), j - 1);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("act agrees with vertex arithmetic on standard simplices") {
  // In Delta^n a simplex is its weakly increasing vertex tuple; act is
  // precomposition of tuples.
  auto d2 = standard_simplex(2);
  for (int n = 0; n <= 3; ++n) {
    for (const SimplexRef& x : enumerate_simplices(*d2, n)) {
      std::vector<int> verts;
      for (const SimplexRef& v : simplex_vertices(*d2, x)) verts.push_back(static_cast<int>(v.cell));
      CHECK(delta_simplex(2, verts) == x);
      for (const Monotone& th : all_monotone(std::max(0, n - 1), n)) {
        std::vector<int> tv;
        for (int j = 0; j <= th.source_dim(); ++j) tv.push_back(verts[static_cast<size_t>(th(j))]);
        CHECK(act(*d2, x, th) == delta_simplex(2, tv));
      }
    }
  }
}

TEST_CASE("validate_sset flags a broken triangle") {
  // Delta^2 with d_0 and d_1 of the 2-cell swapped
  SimplicialSet X;
  CellId v0 = X.add_cell(0, {});
  CellId v1 = X.add_cell(0, {});
  CellId v2 = X.add_cell(0, {});
  CellId e01 = X.add_cell(1, {{{}, v1}, {{}, v0}});
  CellId e02 = X.add_cell(1, {{{}, v2}, {{}, v0}});
  CellId e12 = X.add_cell(1, {{{}, v2}, {{}, v1}});
  X.add_cell(2, {{{}, e02}, {{}, e12}, {{}, e01}});  // d_0 and d_1 swapped
  ValidationReport rep = validate_sset(X);
  CHECK(!rep.ok());
}

TEST_CASE("validate_map catches a vertex swap") {
  auto d2 = standard_simplex(2);
  CHECK(validate_map(identity_map(d2)).ok());
  CHECK(validate_map(terminal_map(d2)).ok());

  auto d1 = standard_simplex(1);
  SimplicialMap f;
  f.source = d1;
  f.target = d1;
  f.assignment = {SimplexRef{{}, 1}, SimplexRef{{}, 0}, SimplexRef{{}, 2}};  // swap vertices
  CHECK(!validate_map(f).ok());
}

TEST_CASE("classifying and delta maps are valid") {
  auto d2 = standard_simplex(2);
  for (int n = 0; n <= 3; ++n)
    for (const SimplexRef& x : enumerate_simplices(*d2, n))
      CHECK(validate_map(classifying_map(d2, x)).ok());
  for (const Monotone& th : all_monotone(1, 2)) CHECK(validate_map(delta_map(th)).ok());
  CHECK(validate_map(sub_delta_inclusion(horn(2, 1), 2)).ok());
  CHECK(validate_map(sub_delta_inclusion(boundary(3), 3)).ok());
}

TEST_CASE("is_iso basic verdicts") {
  auto d1 = standard_simplex(1);
  CHECK(is_iso(identity_map(d1)).is_iso);
  IsoWitness w = is_iso(terminal_map(d1));
  CHECK(!w.is_iso);
  CHECK(!w.reason.empty());
}
