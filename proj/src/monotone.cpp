#include "corrkit/monotone.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace corrkit {

Monotone identity_mono(int n) {
  Monotone f;
  f.target = n;
  f.values.resize(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) f.values[static_cast<size_t>(j)] = j;
  return f;
}

Monotone coface(int i, int n) {
  if (i < 0 || i > n || n < 1) throw std::invalid_argument("coface: index out of range");
  Monotone f;
  f.target = n;
  f.values.reserve(static_cast<size_t>(n));
  for (int j = 0; j <= n; ++j)
    if (j != i) f.values.push_back(j);
  return f;
}

Monotone codegeneracy(int i, int n) {
  if (i < 0 || i > n || n < 0) throw std::invalid_argument("codegeneracy: index out of range");
  Monotone f;
  f.target = n;
  f.values.reserve(static_cast<size_t>(n) + 2);
  for (int j = 0; j <= n + 1; ++j) f.values.push_back(j <= i ? j : j - 1);
  return f;
}

bool is_monotone(const Monotone& f) {
  if (f.values.empty()) return false;
  for (size_t j = 0; j < f.values.size(); ++j) {
    if (f.values[j] < 0 || f.values[j] > f.target) return false;
    if (j > 0 && f.values[j] < f.values[j - 1]) return false;
  }
  return true;
}

bool is_identity(const Monotone& f) {
  if (f.source_dim() != f.target) return false;
  for (int j = 0; j <= f.target; ++j)
    if (f(j) != j) return false;
  return true;
}

bool is_epi(const Monotone& f) {
  if (f.values.front() != 0 || f.values.back() != f.target) return false;
  for (size_t j = 1; j < f.values.size(); ++j)
    if (f.values[j] - f.values[j - 1] > 1) return false;
  return true;
}

bool is_mono(const Monotone& f) {
  for (size_t j = 1; j < f.values.size(); ++j)
    if (f.values[j] <= f.values[j - 1]) return false;
  return true;
}

Monotone compose(const Monotone& outer, const Monotone& inner) {
  if (inner.target != outer.source_dim())
    throw std::invalid_argument("compose: dimension mismatch");
  Monotone f;
  f.target = outer.target;
  f.values.reserve(inner.values.size());
  for (int v : inner.values) f.values.push_back(outer(v));
  return f;
}

EpiMono factor(const Monotone& f) {
  std::vector<int> image;
  for (int v : f.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  EpiMono r;
  r.mono.target = f.target;
  r.mono.values = image;
  r.epi.target = static_cast<int>(image.size()) - 1;
  r.epi.values.reserve(f.values.size());
  for (int v : f.values) {
    auto it = std::lower_bound(image.begin(), image.end(), v);
    r.epi.values.push_back(static_cast<int>(it - image.begin()));
  }
  return r;
}

std::vector<int> epi_repeats(const Monotone& e) {
  std::vector<int> r;
  for (size_t j = 0; j + 1 < e.values.size(); ++j)
    if (e.values[j] == e.values[j + 1]) r.push_back(static_cast<int>(j));
  return r;
}

Monotone epi_from_repeats(const std::vector<int>& repeats, int n) {
  Monotone e;
  e.target = n - static_cast<int>(repeats.size());
  e.values.reserve(static_cast<size_t>(n) + 1);
  size_t ri = 0;
  int v = 0;
  for (int j = 0; j <= n; ++j) {
    e.values.push_back(v);
    if (ri < repeats.size() && repeats[ri] == j)
      ++ri;  // next value repeats
    else
      ++v;
  }
  // last increment overshoots by one
  assert(e.values.back() == e.target);
  return e;
}

Monotone mono_from_image(const std::vector<int>& image, int n) {
  Monotone m;
  m.target = n;
  m.values = image;
  return m;
}

Monotone epi_of_word(const std::vector<int>& word, int n) {
  std::vector<int> repeats(word.rbegin(), word.rend());
  return epi_from_repeats(repeats, n);
}

std::vector<int> word_of_epi(const Monotone& e) {
  std::vector<int> r = epi_repeats(e);
  std::reverse(r.begin(), r.end());
  return r;
}

bool word_is_valid(const std::vector<int>& word, int base_dim) {
  // word = [i_k, ..., i_1] strictly decreasing; s_{i_1} applies to dimension
  // base_dim, s_{i_2} to base_dim+1, and so on.
  int k = static_cast<int>(word.size());
  for (int t = 0; t < k; ++t) {
    int idx = word[static_cast<size_t>(t)];
    int dim_at = base_dim + (k - 1 - t);
    if (idx < 0 || idx > dim_at) return false;
    if (t > 0 && word[static_cast<size_t>(t - 1)] <= idx) return false;
  }
  return true;
}

static void all_monotone_rec(int m, int n, int pos, int low, std::vector<int>& cur,
                             std::vector<Monotone>& out) {
  if (pos > m) {
    out.push_back(Monotone{cur, n});
    return;
  }
  for (int v = low; v <= n; ++v) {
    cur.push_back(v);
    all_monotone_rec(m, n, pos + 1, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Monotone> all_monotone(int m, int n) {
  std::vector<Monotone> out;
  std::vector<int> cur;
  all_monotone_rec(m, n, 0, 0, cur, out);
  return out;
}

std::vector<Monotone> all_epis(int n, int m) {
  std::vector<Monotone> out;
  for (const Monotone& f : all_monotone(n, m))
    if (is_epi(f)) out.push_back(f);
  return out;
}

}  // namespace corrkit
