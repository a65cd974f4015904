#include <gtest/gtest.h>

#include <numeric>

#include <satlab/extremal.hpp>
#include <satlab/json_io.hpp>

#include "oracles.hpp"

using namespace satlab;

namespace {

// Saturated iso-classes found by brute force: every labeled graph, the
// definition of saturation, and permutation-based isomorphism.
std::vector<Graph> brute_force_classes(int n, int s) {
  std::vector<Graph> reps;
  oracle::for_each_graph(n, [&](const Graph &g) {
    if (!oracle::is_saturated(g, s))
      return;
    for (const auto &r : reps)
      if (oracle::isomorphic(r, g))
        return;
    reps.push_back(g);
  });
  return reps;
}

} // namespace

TEST(EnumerateSaturated, MatchesBruteForceUpToSix) {
  for (int s = 3; s <= 5; ++s)
    for (int n = 1; n <= 6; ++n) {
      auto classes = enumerate_saturated(n, s);
      auto reps = brute_force_classes(n, s);
      ASSERT_EQ(classes.size(), reps.size()) << "n = " << n << ", s = " << s;
      for (const auto &r : reps) {
        const auto cert = canonical_certificate(r);
        EXPECT_TRUE(std::any_of(classes.begin(), classes.end(),
                                [&](const SaturatedClass &c) { return c.certificate == cert; }));
      }
    }
}

TEST(EnumerateSaturated, FourVerticesTriangleFree) {
  // K_{1,3} and C_4 are the K_3-saturated graphs on four vertices.
  auto classes = enumerate_saturated(4, 3);
  ASSERT_EQ(classes.size(), 2u);
  std::vector<CanonicalCertificate> certs{canonical_certificate(Graph::star(3)),
                                          canonical_certificate(Graph::cycle(4))};
  std::sort(certs.begin(), certs.end());
  EXPECT_EQ(classes[0].certificate, certs[0]);
  EXPECT_EQ(classes[1].certificate, certs[1]);
}

TEST(EnumerateSaturated, BelowCliqueOrderOnlyComplete) {
  for (int s = 3; s <= 9; ++s) {
    auto classes = enumerate_saturated(s - 1, s);
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].graph, Graph::complete(s - 1));
  }
}

TEST(EnumerateSaturated, OutputIsSaturatedSortedAndContainsSplit) {
  for (int s = 3; s <= 5; ++s)
    for (int n = s; n <= 7; ++n) {
      auto classes = enumerate_saturated(n, s);
      const auto split = canonical_certificate(make_split({n, s - 2}));
      int hits = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        EXPECT_TRUE(check_saturation(classes[i].graph, s).is_saturated);
        EXPECT_EQ(to_graph6(classes[i].graph), classes[i].certificate.bytes);
        EXPECT_GE(Count(static_cast<std::uint64_t>(classes[i].graph.size())), sat_edges_formula(n, s));
        if (i > 0) {
          EXPECT_LT(classes[i - 1].certificate, classes[i].certificate);
        }
        hits += classes[i].certificate == split;
      }
      EXPECT_EQ(hits, 1);
    }
}

TEST(EnumerateSaturated, ShardCountDoesNotMatter) {
  auto one = enumerate_saturated(7, 4, {8, 1, 0});
  for (int shards : {2, 3, 7}) {
    auto many = enumerate_saturated(7, 4, {8, shards, 0});
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i)
      EXPECT_EQ(one[i].certificate, many[i].certificate);
  }
}

TEST(EnumerateSaturated, BudgetErrors) {
  EXPECT_THROW(enumerate_saturated(9, 3), BudgetError);
  EXPECT_THROW(enumerate_saturated(7, 3, {6, 1, 0}), BudgetError);
  EXPECT_THROW(enumerate_saturated(8, 4, {8, 1, 1e-6}), BudgetError);
  EXPECT_THROW(enumerate_saturated(0, 3), ParameterError);
  EXPECT_THROW(enumerate_saturated(5, 2), ParameterError);
}

TEST(ExtremalCount, StarIsUniqueMinimiserOfTwoMatchings) {
  auto r = extremal_count(6, 3, {MotifKind::matching, 2}, SearchMode::min);
  EXPECT_EQ(r.optimum, Count(0));
  ASSERT_TRUE(r.unique);
  EXPECT_EQ(r.extremal_graphs[0], canonical_certificate(make_split({6, 1})));
}

TEST(ExtremalCount, MinimumEdgesAtSevenVertices) {
  auto r = extremal_count(7, 3, {MotifKind::clique, 2}, SearchMode::min);
  EXPECT_EQ(r.optimum, sat_edges_formula(7, 3));
  EXPECT_EQ(r.optimum, Count(6));
  ASSERT_TRUE(r.unique);
  EXPECT_EQ(r.extremal_graphs[0], canonical_certificate(make_split({7, 1})));
}

TEST(ExtremalCount, ZeroRegimeHasSplitAmongExtremal) {
  auto r = extremal_count(6, 4, {MotifKind::matching, 3}, SearchMode::min);
  EXPECT_EQ(r.optimum, Count(0));
  const auto split = canonical_certificate(make_split({6, 2}));
  EXPECT_NE(std::find(r.extremal_graphs.begin(), r.extremal_graphs.end(), split),
            r.extremal_graphs.end());
}

TEST(ExtremalCount, ResultInvariants) {
  const MotifSpec motifs[] = {{MotifKind::matching, 2}, {MotifKind::clique, 3},
                              {MotifKind::indepset, 2}, {MotifKind::matching, 3}};
  for (int s = 3; s <= 5; ++s)
    for (int n = s; n <= 7; ++n) {
      auto classes = enumerate_saturated(n, s);
      const Graph split = make_split({n, s - 2});
      for (const auto &motif : motifs)
        for (auto mode : {SearchMode::min, SearchMode::max}) {
          auto r = extremal_over(classes, n, s, motif, mode);
          std::uint64_t total = 0;
          for (const auto &[value, count] : r.histogram)
            total += count;
          EXPECT_EQ(total, r.saturated_class_count);
          EXPECT_EQ(r.unique, r.extremal_graphs.size() == 1);
          const Count key = mode == SearchMode::min ? r.histogram.begin()->first
                                                    : r.histogram.rbegin()->first;
          EXPECT_EQ(r.optimum, key);
          EXPECT_EQ(r.histogram.at(r.optimum), r.extremal_graphs.size());
          if (mode == SearchMode::min) {
            EXPECT_LE(r.optimum, count_motif(split, motif));
          } else {
            EXPECT_GE(r.optimum, count_motif(split, motif));
          }
        }
    }
}

TEST(ExtremalCount, JsonShape) {
  auto r = extremal_count(5, 3, {MotifKind::matching, 2}, SearchMode::min);
  auto j = to_json(r);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["s"], 3);
  EXPECT_EQ(j["motif"]["kind"], "matching");
  EXPECT_EQ(j["motif"]["size"], 2);
  EXPECT_EQ(j["mode"], "min");
  EXPECT_EQ(j["optimum"], "0");
  EXPECT_TRUE(j["extremal"].is_array());
  EXPECT_EQ(j["extremal"][0], canonical_certificate(Graph::star(4)).bytes);
  EXPECT_EQ(j["unique"], true);
  EXPECT_EQ(j["classes"], r.saturated_class_count);
  EXPECT_TRUE(j["histogram"].is_object());
  EXPECT_EQ(j["histogram"]["0"], 1);
}

TEST(RandomSaturated, OutputIsSaturatedAndDeterministic) {
  for (int s = 3; s <= 6; ++s)
    for (int n : {1, 2, 5, 9, 17, 40})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = random_saturated(n, s, seed);
        ASSERT_TRUE(check_saturation(g, s).is_saturated);
        ASSERT_EQ(g, random_saturated(n, s, seed));
        if (s == 3) {
          EXPECT_FALSE(contains_clique(g, 3));
        }
      }
  EXPECT_NE(random_saturated(20, 3, 1), random_saturated(20, 3, 2));
  EXPECT_THROW(random_saturated(5, 2, 0), ParameterError);
}

TEST(RandomSaturated, EdgeLowerBoundOnManySeeds) {
  const Count bound = sat_edges_formula(30, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_saturated(30, 4, seed);
    ASSERT_GE(Count(static_cast<std::uint64_t>(g.size())), bound);
    ASSERT_GE(count_matchings(g, 2), Count(0));
    for (int v = 0; v < 30; ++v)
      ASSERT_GE(g.degree(v), 2);
  }
}

TEST(RandomSaturated, LargeGraph) {
  Graph g = random_saturated(512, 3, 42);
  EXPECT_FALSE(contains_clique(g, 3));
  EXPECT_TRUE(check_saturation(g, 3).is_saturated);
}

TEST(ProbeConjecture, SplitColumnMatchesCounter) {
  auto rows = probe_conjecture(20, 40, 4, 2, 5, 1);
  ASSERT_EQ(rows.size(), 21u);
  for (const auto &r : rows) {
    EXPECT_EQ(r.split_value, count_matchings(make_split({r.n, 2}), 2));
    EXPECT_EQ(r.split_value, matchings_in_split_exact(r.n, 4, 2));
    EXPECT_EQ(r.sampled_min_at_least_split, r.sampled_min >= r.split_value);
    EXPECT_GE(Count(static_cast<std::uint64_t>(r.min_sampled_edges)), sat_edges_formula(r.n, 4));
  }
  EXPECT_EQ(rows.front().n, 20);
}

TEST(ProbeConjecture, SplitColumnZeroAboveCliquePart) {
  for (auto r : probe_conjecture(8, 14, 4, 3, 3, 9))
    EXPECT_EQ(r.split_value, Count(0));
  for (auto r : probe_conjecture(10, 12, 5, 4, 3, 9))
    EXPECT_EQ(r.split_value, Count(0));
}

TEST(ProbeConjecture, SampledMinimumNotBelowExhaustiveMinimum) {
  for (int n = 5; n <= 7; ++n) {
    auto exhaustive = extremal_count(n, 4, {MotifKind::matching, 2}, SearchMode::min);
    auto rows = probe_conjecture(n, n, 4, 2, 30, 5);
    EXPECT_GE(rows[0].sampled_min, exhaustive.optimum);
  }
}

TEST(ProbeConjecture, Deterministic) {
  auto a = probe_conjecture(10, 12, 4, 2, 10, 77);
  auto b = probe_conjecture(10, 12, 4, 2, 10, 77);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sampled_min, b[i].sampled_min);
    EXPECT_EQ(a[i].min_sampled_edges, b[i].min_sampled_edges);
  }
  EXPECT_THROW(probe_conjecture(10, 12, 4, 1, 10, 0), ParameterError);
  EXPECT_THROW(probe_conjecture(3, 12, 4, 2, 10, 0), ParameterError);
}
