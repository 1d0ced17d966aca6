#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace pit {

// Partition of [0, n): disjoint nonempty colors covering every variable.
// Canonical form: each color sorted ascending, colors ordered by least
// element.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> colors;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Validates and canonicalizes.
Partition make_partition(int n, std::vector<std::vector<int>> colors);

// Ordered sequence (P_1, ..., P_k) over a common ground set.
struct PartitionSeq {
  int n = 0;
  std::vector<Partition> parts;

  int k() const { return static_cast<int>(parts.size()); }
};

PartitionSeq make_seq(std::vector<Partition> parts);

// Classes of variables under merging within every color of P_1..P_level
// (level is 1-based). Each class is simultaneously a union of P_i-colors for
// every i <= level; classes are canonical (sorted, ordered by least element).
std::vector<std::vector<int>> neighborhoods(const PartitionSeq& seq, int level);

// delta = max over levels i in {2..k} and classes at level i of the number of
// P_i-colors inside the class; 1 when k = 1.
int distance(const PartitionSeq& seq);

enum class OrderingMode { kExhaustive, kGreedy };

// Ordering of the given partitions minimizing distance. Exhaustive mode
// (k <= 8) returns the lexicographically-first minimizer; greedy mode scales
// further but its distance is reported, not certified minimal.
std::pair<std::vector<int>, int> min_distance_ordering(
    const std::vector<Partition>& parts, OrderingMode mode);

// Largest j such that every neighborhood class at every level i <= j contains
// at most delta variables of S; k if that holds through level k, 0 if it
// already fails at level 1. Requires delta >= distance(seq).
int phase(const PartitionSeq& seq, int delta, const std::vector<int>& S);

// When phase(S) = j < k: delta+1 variables of S inside one class at level
// j+1 (the lexicographically smallest such tuple); absent when phase(S) = k.
std::optional<std::vector<int>> pivot(const PartitionSeq& seq, int delta,
                                      const std::vector<int>& S);

// Restriction of a partition to a subset of the ground set. Variables are
// reindexed by rank within the sorted subset so the result is a proper
// partition of [0, |subset|); empty colors are dropped.
Partition restrict_partition(const Partition& p, const std::vector<int>& subset);

}  // namespace pit
