#ifndef SATLAB_EXTREMAL_HPP
#define SATLAB_EXTREMAL_HPP

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "count.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "saturation.hpp"

namespace satlab {

/// Hard cap on the vertex count of exhaustive scans.
inline constexpr int kExhaustiveMaxN = 8;

struct SearchBudget {
  int max_n = kExhaustiveMaxN;
  int parallel_shards = 1;
  /// Seconds; zero disables the limit.
  double time_limit = 0;
};

struct SaturatedClass {
  CanonicalCertificate certificate;
  /// The canonical representative (decoded certificate).
  Graph graph;
};

namespace detail {

using SmallRows = std::array<std::uint32_t, kExhaustiveMaxN>;

inline bool small_has_clique(const SmallRows &rows, std::uint32_t cand, int need) {
  if (need <= 0)
    return true;
  if (std::popcount(cand) < need)
    return false;
  if (need == 1)
    return true;
  while (cand != 0) {
    if (std::popcount(cand) < need)
      return false;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (small_has_clique(rows, rows[v] & cand, need - 1))
      return true;
  }
  return false;
}

// All K_s-free labeled graphs on `order` vertices, built column by column
// (vertex j picks its neighbours among 0..j-1). A column containing K_{s-1}
// would close a K_s, so that branch of the mask space is skipped whole.
inline void extend_free(SmallRows &rows, int j, int order, int s, std::vector<SmallRows> &out) {
  if (j >= order) {
    out.push_back(rows);
    return;
  }
  for (std::uint32_t col = 0; col < (std::uint32_t{1} << j); ++col) {
    if (small_has_clique(rows, col, s - 1))
      continue;
    rows[j] = col;
    for (std::uint32_t bits = col; bits != 0; bits &= bits - 1)
      rows[std::countr_zero(bits)] |= std::uint32_t{1} << j;
    extend_free(rows, j + 1, order, s, out);
    for (std::uint32_t bits = col; bits != 0; bits &= bits - 1)
      rows[std::countr_zero(bits)] &= ~(std::uint32_t{1} << j);
    rows[j] = 0;
  }
}

struct ScanContext {
  int n;
  int s;
  std::int64_t min_edges; // 0 when n < s
  int min_degree;         // 0 when n < s
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline;
  std::atomic<bool> *expired;
};

// Completes each prefix graph on n-1 vertices with every neighbourhood of the
// last vertex. Filters, in order: K_s-freeness, nonincreasing degree sequence
// (every class has such a labeling), edge-count and minimum-degree bounds,
// then the saturation test on every non-edge.
inline void scan_shard(const ScanContext &ctx, const std::vector<SmallRows> &prefixes,
                       std::size_t begin, std::size_t end,
                       std::map<CanonicalCertificate, Graph> &found) {
  const int n = ctx.n, s = ctx.s, last = n - 1;
  for (std::size_t p = begin; p < end; ++p) {
    if (ctx.has_deadline && (p & 0xff) == 0) {
      if (ctx.expired->load(std::memory_order_relaxed) ||
          std::chrono::steady_clock::now() > ctx.deadline) {
        ctx.expired->store(true);
        return;
      }
    }
    const SmallRows &base = prefixes[p];
    std::array<int, kExhaustiveMaxN> pdeg{};
    std::int64_t prefix_edges = 0;
    bool orderable = true;
    for (int i = 0; i < last; ++i) {
      pdeg[i] = std::popcount(base[i]);
      prefix_edges += pdeg[i];
      if (i > 0 && pdeg[i - 1] + 1 < pdeg[i])
        orderable = false;
    }
    if (!orderable)
      continue;
    prefix_edges /= 2;

    for (std::uint32_t col = 0; col < (std::uint32_t{1} << last); ++col) {
      const int last_deg = std::popcount(col);
      if (last_deg < ctx.min_degree || prefix_edges + last_deg < ctx.min_edges)
        continue;
      bool ok = true;
      int prev = n; // degrees must be nonincreasing along labels
      for (int i = 0; i < last && ok; ++i) {
        const int d = pdeg[i] + static_cast<int>((col >> i) & 1U);
        ok = d <= prev && d >= ctx.min_degree;
        prev = d;
      }
      if (!ok || last_deg > prev)
        continue;
      if (small_has_clique(base, col, s - 1))
        continue;

      SmallRows rows = base;
      rows[last] = col;
      for (std::uint32_t bits = col; bits != 0; bits &= bits - 1)
        rows[std::countr_zero(bits)] |= std::uint32_t{1} << last;

      const std::uint32_t all = (std::uint32_t{1} << n) - 1;
      for (int u = 0; u < n && ok; ++u) {
        std::uint32_t missing = all & ~rows[u] & ~((std::uint32_t{2} << u) - 1);
        for (; missing != 0 && ok; missing &= missing - 1) {
          const int v = std::countr_zero(missing);
          ok = small_has_clique(rows, rows[u] & rows[v], s - 2);
        }
      }
      if (!ok)
        continue;

      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (std::uint32_t bits = rows[u] >> (u + 1); bits != 0; bits &= bits - 1)
          g.add_edge(u, u + 1 + std::countr_zero(bits));
      auto form = canonical_form(g);
      CanonicalCertificate cert{to_graph6(form.graph)};
      found.try_emplace(std::move(cert), std::move(form.graph));
    }
  }
}

} // namespace detail

/// One representative per isomorphism class of K_s-saturated graphs on n
/// vertices, sorted by certificate. The output does not depend on the shard
/// count.
inline std::vector<SaturatedClass> enumerate_saturated(int n, int s, SearchBudget budget = {}) {
  if (n < 1 || s < 3)
    throw ParameterError("enumerate_saturated needs n >= 1 and s >= 3");
  if (n > budget.max_n || n > kExhaustiveMaxN)
    throw BudgetError("exhaustive search is capped at n = " +
                      std::to_string(std::min(budget.max_n, kExhaustiveMaxN)) + " (got " +
                      std::to_string(n) + ")");
  const int shards = std::max(1, budget.parallel_shards);

  std::vector<detail::SmallRows> prefixes;
  detail::SmallRows rows{};
  detail::extend_free(rows, 1, n - 1, s, prefixes);

  std::atomic<bool> expired{false};
  detail::ScanContext ctx{n,
                          s,
                          n >= s ? static_cast<std::int64_t>(sat_edges_formula(n, s).to_u64()) : 0,
                          n >= s ? s - 2 : 0,
                          std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(budget.time_limit)),
                          budget.time_limit > 0,
                          &expired};

  std::vector<std::map<CanonicalCertificate, Graph>> partial(static_cast<std::size_t>(shards));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  auto run = [&](int shard) {
    try {
      const std::size_t total = prefixes.size();
      const std::size_t begin = total * shard / shards;
      const std::size_t end = total * (shard + 1) / shards;
      detail::scan_shard(ctx, prefixes, begin, end, partial[shard]);
    } catch (...) {
      errors[shard] = std::current_exception();
    }
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::jthread> workers;
    for (int i = 0; i < shards; ++i)
      workers.emplace_back(run, i);
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  if (expired)
    throw BudgetError("time limit of " + std::to_string(budget.time_limit) +
                      " s exceeded while enumerating n = " + std::to_string(n));

  std::map<CanonicalCertificate, Graph> merged;
  for (auto &part : partial)
    merged.merge(part);
  std::vector<SaturatedClass> out;
  out.reserve(merged.size());
  for (auto &[cert, g] : merged)
    out.push_back({cert, g});
  return out;
}

enum class SearchMode { min, max };

inline std::string to_string(SearchMode mode) { return mode == SearchMode::min ? "min" : "max"; }

struct ExtremalResult {
  int n = 0;
  int s = 0;
  MotifSpec motif;
  SearchMode mode = SearchMode::min;
  Count optimum = 0;
  /// Certificates of every class attaining the optimum, sorted.
  std::vector<CanonicalCertificate> extremal_graphs;
  bool unique = false;
  std::uint64_t saturated_class_count = 0;
  /// count value -> number of classes with that value
  std::map<Count, std::uint64_t> histogram;
};

/// Optimum of N(motif, G) over already enumerated saturated classes.
inline ExtremalResult extremal_over(const std::vector<SaturatedClass> &classes, int n, int s,
                                    const MotifSpec &motif, SearchMode mode) {
  ExtremalResult r;
  r.n = n;
  r.s = s;
  r.motif = motif;
  r.mode = mode;
  r.saturated_class_count = classes.size();
  std::optional<Count> best;
  for (const auto &c : classes) {
    const Count value = count_motif(c.graph, motif);
    ++r.histogram[value];
    const bool improves = !best || (mode == SearchMode::min ? value < *best : value > *best);
    if (improves) {
      best = value;
      r.extremal_graphs.clear();
    }
    if (value == *best)
      r.extremal_graphs.push_back(c.certificate);
  }
  r.optimum = best.value_or(0);
  r.unique = r.extremal_graphs.size() == 1;
  return r;
}

inline ExtremalResult extremal_count(int n, int s, const MotifSpec &motif, SearchMode mode,
                                     SearchBudget budget = {}) {
  return extremal_over(enumerate_saturated(n, s, budget), n, s, motif, mode);
}

/// Maximal K_s-free completion: visits all vertex pairs in a seed-determined
/// order and adds each edge that does not close a K_s.
inline Graph random_saturated(int n, int s, std::uint64_t seed) {
  if (n < 1 || s < 3)
    throw ParameterError("random_saturated needs n >= 1 and s >= 3");
  Graph g(n);
  std::vector<Edge> pairs = Graph::complete(n).edges();
  Rng rng(seed);
  shuffle(pairs, rng);
  for (auto [u, v] : pairs)
    if (!creates_clique_on_addition(g, u, v, s))
      g.add_edge(u, v);
  return g;
}

struct ProbeRow {
  int n = 0;
  int samples = 0;
  /// N(M_k, S_{n,s-2}) from the counter.
  Count split_value = 0;
  Count sampled_min = 0;
  std::int64_t min_sampled_edges = 0;
  /// Report-only: the theorem is asymptotic.
  bool sampled_min_at_least_split = false;
};

/// Samples random saturated graphs for each n in [n_lo, n_hi] and compares
/// the smallest observed M_k count with the split graph's.
inline std::vector<ProbeRow> probe_conjecture(int n_lo, int n_hi, int s, int k, int samples,
                                              std::uint64_t seed) {
  if (k < 2 || s < 3)
    throw ParameterError("probe_conjecture needs k >= 2 and s >= 3");
  if (samples < 1)
    throw ParameterError("probe_conjecture needs at least one sample");
  if (n_lo < s || n_hi < n_lo)
    throw ParameterError("probe_conjecture needs s <= n_lo <= n_hi");
  std::vector<ProbeRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    ProbeRow row;
    row.n = n;
    row.samples = samples;
    row.split_value = count_matchings(make_split({n, s - 2}), k);
    std::optional<Count> best;
    std::optional<std::int64_t> fewest;
    for (int i = 0; i < samples; ++i) {
      const std::uint64_t sample_seed =
          mix_seed(seed ^ mix_seed((static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(i)));
      const Graph g = random_saturated(n, s, sample_seed);
      const Count c = count_matchings(g, k);
      if (!best || c < *best)
        best = c;
      if (!fewest || g.size() < *fewest)
        fewest = g.size();
    }
    row.sampled_min = *best;
    row.min_sampled_edges = *fewest;
    row.sampled_min_at_least_split = row.sampled_min >= row.split_value;
    rows.push_back(row);
  }
  return rows;
}

} // namespace satlab

#endif
