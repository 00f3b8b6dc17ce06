#pragma once

#include <cstdint>
#include <vector>

namespace corrkit {

// A monotone map [m] -> [n] in the simplex category, stored by its values.
// values.size() == m+1, entries weakly increasing, within [0, n].
struct Monotone {
  std::vector<int> values;
  int target = 0;

  int source_dim() const { return static_cast<int>(values.size()) - 1; }
  int operator()(int j) const { return values[static_cast<size_t>(j)]; }

  bool operator==(const Monotone&) const = default;
  bool operator<(const Monotone& o) const {
    if (target != o.target) return target < o.target;
    return values < o.values;
  }
};

Monotone identity_mono(int n);
// Coface d^i : [n-1] -> [n], the injection skipping i.
Monotone coface(int i, int n);
// Codegeneracy s^i : [n+1] -> [n], the surjection repeating i.
Monotone codegeneracy(int i, int n);

bool is_monotone(const Monotone& f);
bool is_identity(const Monotone& f);
bool is_epi(const Monotone& f);
bool is_mono(const Monotone& f);

// outer(inner(j)); requires inner.target == outer.source_dim().
Monotone compose(const Monotone& outer, const Monotone& inner);

// Unique epi-mono factorization f = mono . epi.
struct EpiMono {
  Monotone epi;
  Monotone mono;
};
EpiMono factor(const Monotone& f);

// Positions j with e(j) == e(j+1), strictly increasing.
std::vector<int> epi_repeats(const Monotone& e);
// The epi [n] ->> [n - repeats.size()] with the given repeat positions.
Monotone epi_from_repeats(const std::vector<int>& repeats, int n);
// The mono with the given (strictly increasing) image inside [n].
Monotone mono_from_image(const std::vector<int>& image, int n);

// Degeneracy words are strictly decreasing index lists [i_k, ..., i_1],
// denoting s_{i_k} ... s_{i_1}; the empty word is the identity.  Applied to a
// simplex of dimension n - k the word produces dimension n.  The associated
// epi [n] ->> [n-k] has repeat positions exactly {i_1, ..., i_k}.
Monotone epi_of_word(const std::vector<int>& word, int n);
std::vector<int> word_of_epi(const Monotone& e);
bool word_is_valid(const std::vector<int>& word, int base_dim);

// All monotone maps [m] -> [n].
std::vector<Monotone> all_monotone(int m, int n);
// All epis [n] ->> [m].
std::vector<Monotone> all_epis(int n, int m);

}  // namespace corrkit
