#ifndef SATLAB_GRAPH_HPP
#define SATLAB_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace satlab {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 stored as bitset adjacency rows.
///
/// Mutation goes through add_edge/remove_edge, which keep the rows symmetric
/// and loop-free. Once a graph is handed to other code it is treated as
/// immutable.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw ParameterError("vertex count " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxVertices) + "]");
    rows_.resize(static_cast<std::size_t>(n));
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges)
      add_edge(u, v);
  }

  static Graph empty(int n) { return Graph(n); }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      g.rows_[u] = VertexSet::prefix(n);
      g.rows_[u].reset(u);
    }
    g.m_ = static_cast<std::int64_t>(n) * (n - 1) / 2;
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3)
      throw ParameterError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i)
      g.add_edge(i, (i + 1) % n);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
      g.add_edge(i, i + 1);
    return g;
  }

  /// K_{1,leaves} with centre 0.
  static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
      g.add_edge(0, i);
    return g;
  }

  int order() const { return n_; }
  std::int64_t size() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw ParameterError("loop at vertex " + std::to_string(u));
    if (rows_[u].test(v))
      return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!rows_[u].test(v))
      return;
    rows_[u].reset(v);
    rows_[v].reset(u);
    --m_;
  }

  const VertexSet &neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      d[v] = degree(v);
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      rows_[u].above(u).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
  }

  /// Missing pairs (u, v) with u < v in lexicographic order.
  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      (VertexSet::prefix(n_) - rows_[u]).above(u).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw ParameterError("vertex " + std::to_string(v) + " out of range for n = " +
                           std::to_string(n_));
  }

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<VertexSet> rows_;
};

/// Parameters of the split graph S_{n,q}: a q-clique joined to n-q independent vertices.
struct SplitParams {
  int n = 0;
  int q = 0;
};

/// Disjoint union of g and h plus every edge between them. Vertices of h are
/// shifted by |V(g)|.
inline Graph join(const Graph &g, const Graph &h) {
  const int a = g.order(), b = h.order();
  if (a + b > kMaxVertices)
    throw ParameterError("join of " + std::to_string(a) + " and " + std::to_string(b) +
                         " vertices exceeds " + std::to_string(kMaxVertices));
  Graph out(a + b);
  for (auto [u, v] : g.edges())
    out.add_edge(u, v);
  for (auto [u, v] : h.edges())
    out.add_edge(a + u, a + v);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      out.add_edge(u, a + v);
  return out;
}

/// S_{n,q}: vertices 0..q-1 form the clique, q..n-1 the independent part.
inline Graph make_split(SplitParams p) {
  if (p.n < 0 || p.q < 0 || p.q > p.n)
    throw ParameterError("split graph needs 0 <= q <= n (got n = " + std::to_string(p.n) +
                         ", q = " + std::to_string(p.q) + ")");
  return join(Graph::complete(p.q), Graph::empty(p.n - p.q));
}

inline Graph complement(const Graph &g) {
  Graph out(g.order());
  for (auto [u, v] : g.non_edges())
    out.add_edge(u, v);
  return out;
}

/// Image of g under the relabeling v -> perm[v].
inline Graph relabel(const Graph &g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw ParameterError("permutation length does not match vertex count");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p])
      throw ParameterError("not a permutation");
    seen[p] = 1;
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges())
    out.add_edge(perm[u], perm[v]);
  return out;
}

/// Subgraph induced on `keep`, relabeled to 0..|keep|-1 in increasing order.
inline Graph induced(const Graph &g, const VertexSet &keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  keep.for_each([&](int v) { index[v] = next++; });
  Graph out(next);
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0)
      out.add_edge(index[u], index[v]);
  return out;
}

} // namespace satlab

#endif
