#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corrkit/monotone.hpp"

using namespace corrkit;

namespace {

// Independent oracle: evaluate a value table pointwise.
std::vector<int> eval_table(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out;
  for (int v : inner) out.push_back(outer[static_cast<size_t>(v)]);
  return out;
}

}  // namespace

TEST_CASE("cofaces and codegeneracies have the textbook value tables") {
  CHECK(coface(1, 2).values == std::vector<int>{0, 2});
  CHECK(coface(0, 1).values == std::vector<int>{1});
  CHECK(codegeneracy(0, 1).values == std::vector<int>{0, 0, 1});
  CHECK(codegeneracy(1, 1).values == std::vector<int>{0, 1, 1});
}

TEST_CASE("compose agrees with pointwise evaluation") {
  Monotone a = coface(2, 3);
  Monotone b = codegeneracy(1, 2);
  Monotone c = compose(a, b);
  CHECK(c.values == eval_table(a.values, b.values));
  CHECK(c.target == 3);
}

TEST_CASE("epi-mono factorization recomposes and is epi/mono") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng() % 5);
    int m = static_cast<int>(rng() % 5);
    std::vector<int> vals(static_cast<size_t>(m) + 1);
    for (int& v : vals) v = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
    std::sort(vals.begin(), vals.end());
    Monotone f{vals, n};
    EpiMono em = factor(f);
    CHECK(is_epi(em.epi));
    CHECK(is_mono(em.mono));
    CHECK(compose(em.mono, em.epi) == f);
  }
}

TEST_CASE("degeneracy words round-trip through epis") {
  // word [1,0] = s_1 s_0 on a 0-cell gives the constant epi [2] ->> [0]
  Monotone e = epi_of_word({1, 0}, 2);
  CHECK(e.values == std::vector<int>{0, 0, 0});
  CHECK(word_of_epi(e) == std::vector<int>{1, 0});

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    int m = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    for (const Monotone& epi : all_epis(n, m)) {
      CHECK(epi_of_word(word_of_epi(epi), n) == epi);
      CHECK(word_is_valid(word_of_epi(epi), m));
    }
  }
}

TEST_CASE("all_monotone counts match the binomial formula") {
  // | Delta([m],[n]) | = C(m+n+1, m+1)
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(static_cast<long>(all_monotone(m, n).size()) == binom(m + n + 1, m + 1));
}

TEST_CASE("word validity bounds") {
  CHECK(word_is_valid({}, 0));
  CHECK(word_is_valid({0}, 0));
  CHECK(word_is_valid({1, 0}, 0));
  CHECK(!word_is_valid({0, 0}, 0));  // not strictly decreasing
  CHECK(!word_is_valid({2}, 1));     // s_2 undefined on dimension 1
  CHECK(word_is_valid({2}, 2));
}
