#ifndef SATLAB_RANDOM_HPP
#define SATLAB_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace satlab {

// std::shuffle and the standard distributions are implementation-defined, so
// everything seed-driven goes through these helpers on top of mt19937_64,
// whose output sequence is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  if (bound <= 1)
    return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class T> void shuffle(std::vector<T> &items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// G(n, p) with p = num/den.
inline Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng &rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (uniform_below(rng, den) < num)
        g.add_edge(u, v);
  return g;
}

/// Uniform graph on n vertices with exactly m edges.
inline Graph random_graph_with_edges(int n, std::int64_t m, Rng &rng) {
  std::vector<Edge> pairs = Graph::complete(n).edges();
  if (m < 0 || m > static_cast<std::int64_t>(pairs.size()))
    throw ParameterError("edge count out of range");
  shuffle(pairs, rng);
  Graph g(n);
  for (std::int64_t i = 0; i < m; ++i)
    g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

/// Uniformly random permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, Rng &rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  shuffle(perm, rng);
  return perm;
}

} // namespace satlab

#endif
