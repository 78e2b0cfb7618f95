#pragma once

// Brute-force reference computations used to check the library. Each one
// works directly from the multiplication and ignores the library's shortcuts.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "wreathfock/group.hpp"
#include "wreathfock/linalg.hpp"

namespace oracle {

using wreathfock::FiniteGroup;
using wreathfock::Index;
using wreathfock::Rational;

/// Class id per element from conjugating by every element.
inline std::vector<std::size_t> conjugation_orbits(const FiniteGroup& g) {
  std::vector<std::size_t> id(g.size(), SIZE_MAX);
  std::size_t next = 0;
  for (Index x = 0; x < g.size(); ++x) {
    if (id[x] != SIZE_MAX) continue;
    for (Index r = 0; r < g.size(); ++r) id[g.multiply(g.multiply(r, x), g.inverse(r))] = next;
    ++next;
  }
  return id;
}

/// Do two labelings induce the same partition of 0..n-1?
template <class A, class B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) return false;
  std::map<A, B> forward;
  std::map<B, A> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, fnew] = forward.emplace(a[i], b[i]);
    auto [r, rnew] = backward.emplace(b[i], a[i]);
    if (f->second != b[i] || r->second != a[i]) return false;
  }
  return true;
}

inline std::size_t centralizer_size(const FiniteGroup& g, Index x) {
  std::size_t count = 0;
  for (Index s = 0; s < g.size(); ++s) count += g.multiply(s, x) == g.multiply(x, s);
  return count;
}

inline bool associative(const FiniteGroup& g) {
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = 0; b < g.size(); ++b)
      for (Index c = 0; c < g.size(); ++c)
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) return false;
  return true;
}

/// Closure of `gens` under multiplication, ascending.
inline std::vector<Index> generated(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::set<Index> seen{g.identity()};
  std::vector<Index> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index x : frontier)
      for (Index s : gens) {
        const Index y = g.multiply(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Leibniz expansion over all permutations; fine up to 7x7.
inline Rational leibniz_determinant(const wreathfock::RationalMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  Rational det = 0;
  do {
    Rational term = 1;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      term *= m(i, p[i]);
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    }
    det += inversions % 2 ? Rational(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

/// Multisets of colored parts with total n, counted by recursion on the
/// largest (part, color) pair.
inline unsigned long colored_partitions(std::size_t n, std::size_t colors, std::size_t max_key = SIZE_MAX) {
  if (n == 0) return 1;
  unsigned long total = 0;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t color = 0; color < colors; ++color) {
      const std::size_t key = (part - 1) * colors + color;
      if (key > max_key) continue;
      total += colored_partitions(n - part, colors, key);
    }
  return total;
}

inline std::vector<Rational> random_values(std::mt19937& rng, std::size_t n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace oracle
