#ifndef SATLAB_SATURATION_HPP
#define SATLAB_SATURATION_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace satlab {

namespace detail {

// Branch and bound: is there a clique of `need` vertices inside `candidates`?
inline bool has_clique_in(const Graph &g, const VertexSet &candidates, int need) {
  if (need <= 0)
    return true;
  int size = candidates.count();
  if (size < need)
    return false;
  if (need == 1)
    return true;
  bool found = false;
  VertexSet rest = candidates;
  rest.for_each([&](int v) {
    if (found || size < need)
      return;
    if (has_clique_in(g, g.neighbors(v) & rest, need - 1))
      found = true;
    rest.reset(v);
    --size;
  });
  return found;
}

} // namespace detail

/// True if some s vertices of g are pairwise adjacent.
inline bool contains_clique(const Graph &g, int s) {
  if (s < 1)
    throw ParameterError("clique order must be at least 1");
  return detail::has_clique_in(g, g.vertices(), s);
}

/// Whether adding the missing edge uv creates a K_s, i.e. whether the common
/// neighbourhood of u and v holds a K_{s-2}.
inline bool creates_clique_on_addition(const Graph &g, int u, int v, int s) {
  if (s < 2)
    throw ParameterError("clique order must be at least 2");
  if (u == v)
    throw ParameterError("u and v must differ");
  if (g.has_edge(u, v))
    throw ParameterError("(" + std::to_string(u) + ", " + std::to_string(v) +
                         ") is already an edge");
  return detail::has_clique_in(g, g.neighbors(u) & g.neighbors(v), s - 2);
}

struct SaturationReport {
  int s = 0;
  bool is_free = false;
  /// Non-edges whose addition does not create K_s, lexicographically sorted.
  std::vector<Edge> missing_edge_failures;
  bool is_saturated = false;
  /// Saturated only because n < s and the graph is complete.
  bool vacuous = false;
  /// s = 2: only edgeless graphs qualify.
  bool degenerate = false;
};

inline SaturationReport check_saturation(const Graph &g, int s) {
  if (s < 2)
    throw ParameterError("saturation needs s >= 2");
  SaturationReport r;
  r.s = s;
  r.degenerate = s == 2;
  r.is_free = !contains_clique(g, s);
  for (auto [u, v] : g.non_edges())
    if (!creates_clique_on_addition(g, u, v, s))
      r.missing_edge_failures.emplace_back(u, v);
  r.is_saturated = r.is_free && r.missing_edge_failures.empty();
  r.vacuous = r.is_saturated && g.order() < s;
  return r;
}

} // namespace satlab

#endif
