#ifndef SATLAB_COUNTING_HPP
#define SATLAB_COUNTING_HPP

#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace satlab {

enum class MotifKind { matching, clique, indepset };

/// Which pattern to count: M_k, K_r or an independent set of size l.
struct MotifSpec {
  MotifKind kind = MotifKind::matching;
  int size = 1;

  friend bool operator==(const MotifSpec &, const MotifSpec &) = default;
};

inline std::string to_string(MotifKind kind) {
  switch (kind) {
  case MotifKind::matching:
    return "matching";
  case MotifKind::clique:
    return "clique";
  case MotifKind::indepset:
    return "indepset";
  }
  return "?";
}

/// "matching:K", "clique:R" or "indepset:L".
inline MotifSpec parse_motif(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParameterError("motif must look like kind:size, got '" + text + "'");
  std::string kind = text.substr(0, colon);
  MotifSpec spec;
  if (kind == "matching")
    spec.kind = MotifKind::matching;
  else if (kind == "clique")
    spec.kind = MotifKind::clique;
  else if (kind == "indepset")
    spec.kind = MotifKind::indepset;
  else
    throw ParameterError("unknown motif kind '" + kind + "'");
  try {
    std::size_t used = 0;
    spec.size = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1)
      throw ParameterError("trailing characters in motif size");
  } catch (const std::logic_error &) {
    throw ParameterError("invalid motif size in '" + text + "'");
  }
  if (spec.size < 1)
    throw ParameterError("motif size must be at least 1");
  return spec;
}

inline std::string to_string(const MotifSpec &m) {
  return to_string(m.kind) + ":" + std::to_string(m.size);
}

// ---------------------------------------------------------------------------
// Matchings

/// How the matching counter chooses the vertex to branch on. Every policy
/// yields the same count; they differ only in recursion shape.
enum class PivotRule { min_degree, max_degree, first_vertex, last_vertex };

struct MatchingOptions {
  PivotRule pivot = PivotRule::min_degree;
  /// Cache subproblem results keyed by (remaining vertices, k).
  bool memoize = true;
};

namespace detail {

class MatchingCounter {
public:
  MatchingCounter(const Graph &g, MatchingOptions opts) : g_(g), opts_(opts) {}

  // Branching on pivot u splits matchings into those avoiding u (G - u) and,
  // for each neighbour v, those using uv (G - u - v with k - 1 edges left).
  // This is the deletion/contraction recursion N_k(G) = N_k(G - e) +
  // N_{k-1}(G - u - v) applied to every edge at u in turn.
  Count count(VertexSet alive, int k) {
    if (k == 0)
      return 1;

    int live = 0;
    std::int64_t twice_edges = 0;
    int pivot = -1, pivot_deg = 0;
    VertexSet trimmed;
    alive.for_each([&](int v) {
      const int d = (g_.neighbors(v) & alive).count();
      if (d == 0)
        return;
      trimmed.set(v);
      ++live;
      twice_edges += d;
      if (pivot < 0 || better_pivot(d, pivot_deg)) {
        pivot = v;
        pivot_deg = d;
      }
    });
    if (2 * k > live)
      return 0;
    const std::int64_t edges = twice_edges / 2;
    if (k == 1)
      return static_cast<std::uint64_t>(edges);
    if (edges < k)
      return 0;

    Key key{trimmed, k};
    if (opts_.memoize) {
      if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    }

    VertexSet rest = trimmed;
    rest.reset(pivot);
    Count total = count(rest, k);
    (g_.neighbors(pivot) & rest).for_each([&](int v) {
      VertexSet without = rest;
      without.reset(v);
      total += count(without, k - 1);
    });

    if (opts_.memoize)
      memo_.emplace(key, total);
    return total;
  }

private:
  struct Key {
    VertexSet alive;
    int k;
    bool operator==(const Key &) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key &key) const noexcept {
      return key.alive.hash() ^ (static_cast<std::size_t>(key.k) * 0x9e3779b97f4a7c15ULL);
    }
  };

  bool better_pivot(int d, int current) const {
    switch (opts_.pivot) {
    case PivotRule::min_degree:
      return d < current;
    case PivotRule::max_degree:
      return d > current;
    case PivotRule::first_vertex:
      return false;
    case PivotRule::last_vertex:
      return true;
    }
    return false;
  }

  const Graph &g_;
  MatchingOptions opts_;
  std::unordered_map<Key, Count, KeyHash> memo_;
};

} // namespace detail

/// Number of k-edge matchings of g, each counted once as an edge set.
inline Count count_matchings(const Graph &g, int k, MatchingOptions opts = {}) {
  if (k < 0)
    throw ParameterError("matching size must be nonnegative");
  return detail::MatchingCounter(g, opts).count(g.vertices(), k);
}

/// N(M_2, G) from the edge count and degree sequence: (m^2 + m - sum d^2) / 2.
inline Count count_m2_via_degrees(const Graph &g) {
  const Count m = static_cast<std::uint64_t>(g.size());
  Count sq = 0;
  for (int v = 0; v < g.order(); ++v) {
    const Count d = static_cast<std::uint64_t>(g.degree(v));
    sq += d * d;
  }
  return (m * m + m - sq).exact_div(2);
}

// ---------------------------------------------------------------------------
// Cliques and independent sets

namespace detail {

inline Count count_cliques_in(const Graph &g, const VertexSet &candidates, int r) {
  if (r == 1)
    return static_cast<std::uint64_t>(candidates.count());
  Count total = 0;
  candidates.for_each([&](int v) {
    VertexSet next = g.neighbors(v) & candidates.above(v);
    if (next.count() >= r - 1)
      total += count_cliques_in(g, next, r - 1);
  });
  return total;
}

} // namespace detail

/// Number of r-vertex subsets inducing K_r.
inline Count count_cliques(const Graph &g, int r) {
  if (r < 1)
    throw ParameterError("clique order must be at least 1");
  return detail::count_cliques_in(g, g.vertices(), r);
}

/// Number of l-vertex subsets with no internal edge.
inline Count count_indep_sets(const Graph &g, int l) {
  if (l < 1)
    throw ParameterError("independent set size must be at least 1");
  return count_cliques(complement(g), l);
}

inline Count count_motif(const Graph &g, const MotifSpec &motif) {
  switch (motif.kind) {
  case MotifKind::matching:
    return count_matchings(g, motif.size);
  case MotifKind::clique:
    return count_cliques(g, motif.size);
  case MotifKind::indepset:
    return count_indep_sets(g, motif.size);
  }
  throw ParameterError("unknown motif");
}

// ---------------------------------------------------------------------------
// Maximum matching

/// Size of a maximum matching, by Edmonds' blossom algorithm.
inline int matching_number(const Graph &g) {
  const int n = g.order();
  std::vector<int> match(n, -1), base(n), parent(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1)
        break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b])
        return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i)
      base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      int found = -1;
      g.neighbors(v).for_each([&](int to) {
        if (found >= 0 || base[v] == base[to] || match[v] == to)
          return;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            found = to;
            return;
          }
          used[match[to]] = 1;
          q.push(match[to]);
        }
      });
      if (found >= 0)
        return found;
    }
    return -1;
  };

  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1)
      continue;
    int end = find_path(v);
    if (end < 0)
      continue;
    ++size;
    while (end != -1) {
      int pv = parent[end], ppv = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = ppv;
    }
  }
  return size;
}

} // namespace satlab

#endif
