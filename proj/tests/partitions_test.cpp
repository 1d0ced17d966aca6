#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pit/basesets.hpp"
#include "pit/errors.hpp"
#include "pit/partitions.hpp"
#include "pit/rng.hpp"

namespace pit {
namespace {

// Convenience: 1-based color lists (matching the file format and the worked
// examples) to 0-based partitions.
Partition part(int n, std::vector<std::vector<int>> colors1) {
  for (auto& c : colors1)
    for (auto& v : c) --v;
  return make_partition(n, std::move(colors1));
}

PartitionSeq singletons_then_pairs() {
  return make_seq({part(4, {{1}, {2}, {3}, {4}}), part(4, {{1, 2}, {3, 4}})});
}

PartitionSeq cyclic6() {
  return make_seq({part(6, {{1, 2}, {3, 4}, {5, 6}}),
                   part(6, {{2, 3}, {4, 5}, {6, 1}})});
}

// The n/2-distance cyclic pair on even n: {1,2}{3,4}... vs {2,3}{4,5}...{n,1}.
PartitionSeq cyclic(int n) {
  std::vector<std::vector<int>> p1, p2;
  for (int i = 1; i <= n; i += 2) p1.push_back({i, i + 1});
  for (int i = 2; i <= n; i += 2) p2.push_back({i, i % n + 1});
  return make_seq({part(n, std::move(p1)), part(n, std::move(p2))});
}

TEST(Neighborhoods, LevelOneIsP1Colors) {
  auto seq = cyclic6();
  EXPECT_EQ(neighborhoods(seq, 1),
            (std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(Neighborhoods, SingletonsThenPairs) {
  auto seq = singletons_then_pairs();
  EXPECT_EQ(neighborhoods(seq, 2),
            (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
}

TEST(Neighborhoods, CyclicMergesEverything) {
  auto seq = cyclic6();
  EXPECT_EQ(neighborhoods(seq, 2),
            (std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}}));
}

TEST(Neighborhoods, RefineDownward) {
  // Every level-(j+1) class is a union of level-j classes.
  SplitMix64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng.below(6));
    int k = 1 + static_cast<int>(rng.below(4));
    std::vector<Partition> parts;
    for (int i = 0; i < k; ++i) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int j = n - 1; j > 0; --j)
        std::swap(perm[static_cast<std::size_t>(j)],
                  perm[rng.below(static_cast<std::uint64_t>(j) + 1)]);
      std::vector<std::vector<int>> colors;
      std::size_t at = 0;
      while (at < perm.size()) {
        std::size_t len = 1 + rng.below(3);
        len = std::min(len, perm.size() - at);
        colors.emplace_back(perm.begin() + static_cast<long>(at),
                            perm.begin() + static_cast<long>(at + len));
        at += len;
      }
      parts.push_back(make_partition(n, std::move(colors)));
    }
    PartitionSeq seq = make_seq(parts);
    for (int j = 1; j < k; ++j) {
      auto fine = neighborhoods(seq, j);
      auto coarse = neighborhoods(seq, j + 1);
      for (auto& f : fine) {
        int found = 0;
        for (auto& c : coarse)
          if (std::includes(c.begin(), c.end(), f.begin(), f.end())) ++found;
        EXPECT_EQ(found, 1);
      }
    }
  }
}

TEST(Distance, SingletonsThenPairsIsOne) {
  EXPECT_EQ(distance(singletons_then_pairs()), 1);
}

TEST(Distance, CyclicIsHalfN) {
  EXPECT_EQ(distance(cyclic6()), 3);
  for (int n : {4, 6, 8, 10}) EXPECT_EQ(distance(cyclic(n)), n / 2);
}

TEST(Distance, SinglePartitionIsOne) {
  EXPECT_EQ(distance(make_seq({part(4, {{1, 2}, {3, 4}})})), 1);
}

TEST(Distance, RefinementChainIsOne) {
  // Build a random chain where each partition coarsens the previous one.
  SplitMix64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng.below(6));
    std::vector<std::vector<int>> colors;
    for (int v = 0; v < n; ++v) colors.push_back({v});
    std::vector<Partition> chain{make_partition(n, colors)};
    for (int step = 0; step < 3; ++step) {
      // merge random pairs of colors
      while (colors.size() > 1 && rng.below(2) == 0) {
        std::size_t a = rng.below(colors.size());
        std::size_t b = rng.below(colors.size());
        if (a == b) continue;
        auto& ca = colors[a];
        auto& cb = colors[b];
        ca.insert(ca.end(), cb.begin(), cb.end());
        colors.erase(colors.begin() + static_cast<long>(b));
      }
      chain.push_back(make_partition(n, colors));
    }
    EXPECT_EQ(distance(make_seq(chain)), 1);
  }
}

TEST(MinDistanceOrdering, FineBeforeCoarse) {
  Partition fine = part(4, {{1}, {2}, {3}, {4}});
  Partition coarse = part(4, {{1, 2}, {3, 4}});
  auto [order, delta] =
      min_distance_ordering({fine, coarse}, OrderingMode::kExhaustive);
  EXPECT_EQ(order, (std::vector<int>{0, 1}));
  EXPECT_EQ(delta, 1);
  // Reversed input: the minimizer puts the fine partition first.
  auto [order2, delta2] =
      min_distance_ordering({coarse, fine}, OrderingMode::kExhaustive);
  EXPECT_EQ(order2, (std::vector<int>{1, 0}));
  EXPECT_EQ(delta2, 1);
}

TEST(MinDistanceOrdering, IdenticalPartitions) {
  Partition p = part(4, {{1, 2}, {3, 4}});
  auto [order, delta] = min_distance_ordering({p, p}, OrderingMode::kExhaustive);
  EXPECT_EQ(order, (std::vector<int>{0, 1}));  // lexicographically first
  EXPECT_EQ(delta, 1);
}

TEST(MinDistanceOrdering, CyclicBothOrdersGiveThree) {
  auto seq = cyclic6();
  auto [order, delta] = min_distance_ordering({seq.parts[0], seq.parts[1]},
                                              OrderingMode::kExhaustive);
  EXPECT_EQ(delta, 3);
  EXPECT_EQ(order, (std::vector<int>{0, 1}));
}

TEST(MinDistanceOrdering, GreedyReportsConsistentDistance) {
  auto seq = cyclic6();
  auto [order, delta] = min_distance_ordering({seq.parts[0], seq.parts[1]},
                                              OrderingMode::kGreedy);
  std::vector<Partition> arranged;
  for (int i : order) arranged.push_back(seq.parts[static_cast<std::size_t>(i)]);
  EXPECT_EQ(distance(make_seq(arranged)), delta);
}

TEST(MinDistanceOrdering, ExhaustiveCap) {
  std::vector<Partition> many(9, part(2, {{1}, {2}}));
  EXPECT_THROW(min_distance_ordering(many, OrderingMode::kExhaustive),
               SizeLimitError);
}

TEST(Phase, EmptySupportIsK) {
  EXPECT_EQ(phase(cyclic6(), 3, {}), 2);
}

TEST(Phase, SmallSupportIsK) {
  // |S| <= delta can never put delta+1 variables into one class.
  EXPECT_EQ(phase(cyclic6(), 3, {0, 2, 4}), 2);
  EXPECT_EQ(phase(singletons_then_pairs(), 1, {0}), 2);
}

TEST(Phase, DropsAtTheLevelWhereAClassOverfills) {
  auto chain = singletons_then_pairs();
  // {1,2} is split at level 1 but shares a level-2 class: phase 1.
  EXPECT_EQ(phase(chain, 1, {0, 1}), 1);
  // {1,3} never shares a class: phase k.
  EXPECT_EQ(phase(chain, 1, {0, 2}), 2);
  // Two variables in one level-1 color: phase 0 (distance of the identical
  // pair sequence is 1, so delta = 1 is legal).
  Partition pairs = part(4, {{1, 2}, {3, 4}});
  auto seq0 = make_seq({pairs, pairs});
  EXPECT_EQ(phase(seq0, 1, {0, 1}), 0);
  auto piv0 = pivot(seq0, 1, {0, 1, 2});
  ASSERT_TRUE(piv0.has_value());
  EXPECT_EQ(*piv0, (std::vector<int>{0, 1}));
}

TEST(Phase, DeltaBelowDistanceThrows) {
  EXPECT_THROW(phase(cyclic6(), 2, {0}), UsageError);
}

TEST(Phase, SupersetMonotone) {
  SplitMix64 rng(13);
  auto seq = cyclic6();
  int delta = 3;
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t s_mask = static_cast<std::uint32_t>(rng.below(64));
    std::uint32_t t_mask = s_mask | static_cast<std::uint32_t>(rng.below(64));
    std::vector<int> S, T;
    for (int v = 0; v < 6; ++v) {
      if (s_mask >> v & 1) S.push_back(v);
      if (t_mask >> v & 1) T.push_back(v);
    }
    EXPECT_LE(phase(seq, delta, T), phase(seq, delta, S));
  }
}

TEST(Pivot, AbsentAtPhaseK) {
  EXPECT_FALSE(pivot(cyclic6(), 3, {0, 2, 4}).has_value());
}

TEST(Pivot, PresentIffPhaseBelowK) {
  SplitMix64 rng(17);
  auto chain = singletons_then_pairs();
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t mask = static_cast<std::uint32_t>(rng.below(16));
    std::vector<int> S;
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) S.push_back(v);
    auto piv = pivot(chain, 1, S);
    EXPECT_EQ(piv.has_value(), phase(chain, 1, S) < chain.k());
    if (piv) {
      EXPECT_EQ(piv->size(), 2u);  // delta + 1
      // both pivot variables lie in one class at level phase+1
      auto classes = neighborhoods(chain, phase(chain, 1, S) + 1);
      bool together = false;
      for (auto& cls : classes)
        together |= std::includes(cls.begin(), cls.end(), piv->begin(),
                                  piv->end());
      EXPECT_TRUE(together);
    }
  }
}

TEST(Pivot, LexSmallestWitness) {
  auto chain = singletons_then_pairs();
  // S = {1,2,3,4}: classes {1,2} and {3,4} both violate delta=1 at level 2;
  // the reported pivot is the lexicographically smallest pair.
  auto piv = pivot(chain, 1, {0, 1, 2, 3});
  ASSERT_TRUE(piv.has_value());
  EXPECT_EQ(*piv, (std::vector<int>{0, 1}));
}

TEST(BaseSets, CyclicSplitsIntoOddsAndEvens) {
  auto seq = cyclic6();
  auto d = base_sets({seq.parts[0], seq.parts[1]});
  ASSERT_EQ(d.sets.size(), 2u);
  EXPECT_EQ(d.sets[0], (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(d.sets[1], (std::vector<int>{1, 3, 5}));
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    std::vector<Partition> restricted;
    for (int idx : d.orders[i])
      restricted.push_back(restrict_partition(
          (idx == 0 ? seq.parts[0] : seq.parts[1]), d.sets[i]));
    EXPECT_EQ(distance(make_seq(restricted)), 1);
  }
}

TEST(BaseSets, OneBigColorKeepsWholeGroundSet) {
  Partition whole = part(6, {{1, 2, 3, 4, 5, 6}});
  Partition other = part(6, {{1, 4}, {2, 5}, {3, 6}});
  auto d = base_sets({whole, other});
  ASSERT_EQ(d.sets.size(), 1u);
  EXPECT_EQ(d.sets[0], (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(d.orders[0], (std::vector<int>{1, 0}));  // (P2, P1)
}

TEST(BaseSets, TrivialSinglePartition) {
  Partition p = part(4, {{1, 2}, {3, 4}});
  auto d = base_sets({p});
  ASSERT_EQ(d.sets.size(), 1u);
  EXPECT_EQ(d.sets[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(d.orders[0], (std::vector<int>{0}));
}

// Random partition helper for the count-bound test.
Partition random_partition(int n, SplitMix64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int j = n - 1; j > 0; --j)
    std::swap(perm[static_cast<std::size_t>(j)],
              perm[rng.below(static_cast<std::uint64_t>(j) + 1)]);
  std::vector<std::vector<int>> colors;
  std::size_t at = 0;
  while (at < perm.size()) {
    std::size_t len = 1 + rng.below(8);
    len = std::min(len, perm.size() - at);
    colors.emplace_back(perm.begin() + static_cast<long>(at),
                        perm.begin() + static_cast<long>(at + len));
    at += len;
  }
  return make_partition(n, std::move(colors));
}

TEST(BaseSets, CountBoundAndDistanceOneAtC3N64) {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 64, c = 3;
    std::vector<Partition> parts;
    for (int i = 0; i < c; ++i) parts.push_back(random_partition(n, rng));
    auto d = base_sets(parts);
    // 2^(c-1) * n^(1 - 1/2^(c-1)) = 4 * 64^(3/4) = 90.5...
    EXPECT_LT(static_cast<double>(d.sets.size()),
              4.0 * std::pow(64.0, 0.75));
    // disjoint cover
    std::vector<int> seen(64, 0);
    for (auto& s : d.sets)
      for (int v : s) seen[static_cast<std::size_t>(v)]++;
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 64);
    // every restriction admits distance 1 under the returned order
    for (std::size_t i = 0; i < d.sets.size(); ++i) {
      std::vector<Partition> restricted;
      for (int idx : d.orders[i])
        restricted.push_back(
            restrict_partition(parts[static_cast<std::size_t>(idx)], d.sets[i]));
      EXPECT_EQ(distance(make_seq(restricted)), 1);
    }
  }
}

}  // namespace
}  // namespace pit
