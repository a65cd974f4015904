#ifndef SATLAB_CANONICAL_HPP
#define SATLAB_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace satlab {

/// Label-independent encoding of an isomorphism class: the graph6 string of
/// the canonical relabeling (vertex count followed by the upper triangle).
struct CanonicalCertificate {
  std::string bytes;

  Graph decode() const { return from_graph6(bytes); }

  friend bool operator==(const CanonicalCertificate &, const CanonicalCertificate &) = default;
  friend auto operator<=>(const CanonicalCertificate &a, const CanonicalCertificate &b) {
    return a.bytes <=> b.bytes;
  }
};

struct CanonicalForm {
  Graph graph;
  /// position[v] is the canonical label of vertex v.
  std::vector<int> position;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

/// Splits cells by neighbour counts into each splitter cell until the ordered
/// partition is equitable. Sub-cells are ordered by ascending count, so the
/// result depends only on the graph structure and the input partition.
inline void refine(const Graph &g, Cells &cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      VertexSet splitter;
      for (int v : cells[si])
        splitter.set(v);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        auto &cell = cells[ci];
        if (cell.size() < 2)
          continue;
        std::vector<std::pair<int, int>> keyed; // (count, vertex)
        keyed.reserve(cell.size());
        for (int v : cell)
          keyed.emplace_back((g.neighbors(v) & splitter).count(), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first)
          continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first)
            pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(),
                     pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    std::vector<int> prefix;
    search(std::move(cells), prefix);

    CanonicalForm out;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p)
      out.position[best_lab_[p]] = p;
    out.graph = relabel(g_, out.position);
    return out;
  }

private:
  // Returns the depth the search should resume at; values below the caller's
  // depth unwind further.
  int search(Cells cells, std::vector<int> &prefix) {
    const int depth = static_cast<int>(prefix.size());
    refine(g_, cells);

    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto &c) { return c.size() > 1; });
    if (target == cells.end())
      return leaf(cells, prefix);

    const bool on_first_path =
        !have_first_ || (prefix.size() <= first_path_.size() &&
                          std::equal(prefix.begin(), prefix.end(), first_path_.begin()));
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> choices = cells[ti];
    std::vector<int> explored;

    for (int v : choices) {
      if (on_first_path && have_first_ && pruned_by_orbit(v, explored, prefix))
        continue;
      explored.push_back(v);

      Cells child = cells;
      std::vector<int> rest;
      for (int w : child[ti])
        if (w != v)
          rest.push_back(w);
      child[ti] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(ti) + 1, std::move(rest));

      prefix.push_back(v);
      const int resume = search(std::move(child), prefix);
      prefix.pop_back();
      if (resume < depth)
        return resume;
    }
    return depth;
  }

  int leaf(const Cells &cells, const std::vector<int> &prefix) {
    const int depth = static_cast<int>(prefix.size());
    std::vector<int> lab; // lab[p] = vertex at position p
    lab.reserve(static_cast<std::size_t>(n_));
    for (const auto &c : cells)
      lab.push_back(c[0]);
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p)
      position[lab[p]] = p;
    std::string key = to_graph6(relabel(g_, position));

    if (!have_first_) {
      have_first_ = true;
      first_path_ = prefix;
      first_lab_ = lab;
      first_key_ = key;
      best_lab_ = lab;
      best_key_ = key;
      return depth;
    }
    if (key == first_key_) {
      record_automorphism(lab, first_lab_);
      // The subtree below the divergence point mirrors explored leaves.
      std::size_t common = 0;
      while (common < prefix.size() && common < first_path_.size() &&
             prefix[common] == first_path_[common])
        ++common;
      return static_cast<int>(common);
    }
    if (key == best_key_) {
      record_automorphism(lab, best_lab_);
      return depth;
    }
    if (key < best_key_) {
      best_key_ = std::move(key);
      best_lab_ = lab;
    }
    return depth;
  }

  // gamma(from[p]) = to[p]
  void record_automorphism(const std::vector<int> &from, const std::vector<int> &to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p)
      gamma[from[p]] = to[p];
    generators_.push_back(std::move(gamma));
  }

  // True if v lies in the orbit of an explored sibling under the automorphisms
  // found so far that fix the current prefix pointwise.
  bool pruned_by_orbit(int v, const std::vector<int> &explored,
                       const std::vector<int> &prefix) const {
    if (explored.empty() || generators_.empty())
      return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto &gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int u) { return gamma[u] == u; });
      if (!fixes)
        continue;
      for (int x = 0; x < n_; ++x)
        parent[find(x)] = find(gamma[x]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int w) { return find(w) == root; });
  }

  const Graph &g_;
  int n_;
  bool have_first_ = false;
  std::vector<int> first_path_;
  std::vector<int> first_lab_;
  std::string first_key_;
  std::vector<int> best_lab_;
  std::string best_key_;
  std::vector<std::vector<int>> generators_;
};

} // namespace detail

/// Relabeling of g selected by individualization-refinement: equitable
/// refinement, then branching over the first non-singleton cell, keeping the
/// leaf whose upper triangle is lexicographically smallest. Automorphisms
/// found between leaves prune equivalent branches.
inline CanonicalForm canonical_form(const Graph &g) {
  if (g.order() == 0)
    return {Graph(0), {}};
  return detail::CanonicalSearch(g).run();
}

inline CanonicalCertificate canonical_certificate(const Graph &g) {
  return {to_graph6(canonical_form(g).graph)};
}

inline bool are_isomorphic(const Graph &g, const Graph &h) {
  if (g.order() != h.order() || g.size() != h.size())
    return false;
  return canonical_certificate(g) == canonical_certificate(h);
}

} // namespace satlab

#endif
