#include "pit/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "pit/errors.hpp"

namespace pit {

namespace {

// Minimal union-find over [0, n).
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    by_root[static_cast<std::size_t>(uf.find(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;  // ordered by least element since roots are minima
}

// Union-find with colors of parts[0..upto-1] merged.
UnionFind joined(const PartitionSeq& seq, int upto) {
  UnionFind uf(seq.n);
  for (int i = 0; i < upto; ++i)
    for (auto& color : seq.parts[static_cast<std::size_t>(i)].colors)
      for (std::size_t j = 1; j < color.size(); ++j)
        uf.unite(color[0], color[j]);
  return uf;
}

// Max number of P_level-colors inside one class of the level join.
int max_colors_per_class(const PartitionSeq& seq, int level) {
  UnionFind uf = joined(seq, level);
  std::vector<int> count(static_cast<std::size_t>(seq.n), 0);
  int best = 0;
  for (auto& color : seq.parts[static_cast<std::size_t>(level - 1)].colors) {
    int root = uf.find(color[0]);
    best = std::max(best, ++count[static_cast<std::size_t>(root)]);
  }
  return best;
}

}  // namespace

Partition make_partition(int n, std::vector<std::vector<int>> colors) {
  if (n <= 0) throw UsageError("partition: n must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto& c : colors) {
    if (c.empty()) throw UsageError("partition: empty color");
    std::sort(c.begin(), c.end());
    for (int v : c) {
      if (v < 0 || v >= n) throw UsageError("partition: variable out of range");
      if (seen[static_cast<std::size_t>(v)])
        throw UsageError("partition: variable " + std::to_string(v + 1) +
                         " in two colors");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw UsageError("partition: variable " + std::to_string(v + 1) +
                       " uncovered");
  std::sort(colors.begin(), colors.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return Partition{n, std::move(colors)};
}

PartitionSeq make_seq(std::vector<Partition> parts) {
  if (parts.empty()) throw UsageError("partition sequence: k >= 1 required");
  int n = parts[0].n;
  for (auto& p : parts)
    if (p.n != n) throw UsageError("partition sequence: mismatched ground sets");
  return PartitionSeq{n, std::move(parts)};
}

std::vector<std::vector<int>> neighborhoods(const PartitionSeq& seq,
                                            int level) {
  if (level < 1 || level > seq.k())
    throw UsageError("neighborhoods: level out of range");
  UnionFind uf = joined(seq, level);
  return classes_of(uf, seq.n);
}

int distance(const PartitionSeq& seq) {
  int delta = 1;
  for (int i = 2; i <= seq.k(); ++i)
    delta = std::max(delta, max_colors_per_class(seq, i));
  return delta;
}

std::pair<std::vector<int>, int> min_distance_ordering(
    const std::vector<Partition>& parts, OrderingMode mode) {
  if (parts.empty()) throw UsageError("min_distance_ordering: no partitions");
  int k = static_cast<int>(parts.size());
  auto dist_of = [&](const std::vector<int>& order) {
    std::vector<Partition> arranged;
    arranged.reserve(parts.size());
    for (int idx : order) arranged.push_back(parts[static_cast<std::size_t>(idx)]);
    return distance(make_seq(std::move(arranged)));
  };
  if (mode == OrderingMode::kExhaustive) {
    if (k > 8)
      throw SizeLimitError("min_distance_ordering: exhaustive mode needs k <= 8");
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm;
    int best = 0;
    do {
      int d = dist_of(perm);
      if (best_perm.empty() || d < best) {
        best_perm = perm;
        best = d;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best_perm, best};
  }
  // Greedy: extend the prefix with the unused partition whose addition keeps
  // the incremental color-count smallest; ties by smallest index.
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (int step = 0; step < k; ++step) {
    int best_idx = -1, best_score = 0;
    for (int cand = 0; cand < k; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      std::vector<Partition> arranged;
      for (int idx : order) arranged.push_back(parts[static_cast<std::size_t>(idx)]);
      arranged.push_back(parts[static_cast<std::size_t>(cand)]);
      PartitionSeq s = make_seq(std::move(arranged));
      int score = s.k() == 1 ? 1 : max_colors_per_class(s, s.k());
      if (best_idx < 0 || score < best_score) {
        best_idx = cand;
        best_score = score;
      }
    }
    used[static_cast<std::size_t>(best_idx)] = true;
    order.push_back(best_idx);
  }
  return {order, dist_of(order)};
}

int phase(const PartitionSeq& seq, int delta, const std::vector<int>& S) {
  if (delta < distance(seq))
    throw UsageError("phase: delta below the sequence distance");
  for (int v : S)
    if (v < 0 || v >= seq.n) throw UsageError("phase: variable out of range");
  std::vector<bool> in_s(static_cast<std::size_t>(seq.n), false);
  for (int v : S) in_s[static_cast<std::size_t>(v)] = true;
  for (int j = 1; j <= seq.k(); ++j) {
    UnionFind uf = joined(seq, j);
    std::vector<int> count(static_cast<std::size_t>(seq.n), 0);
    for (int v = 0; v < seq.n; ++v) {
      if (!in_s[static_cast<std::size_t>(v)]) continue;
      if (++count[static_cast<std::size_t>(uf.find(v))] > delta) return j - 1;
    }
  }
  return seq.k();
}

std::optional<std::vector<int>> pivot(const PartitionSeq& seq, int delta,
                                      const std::vector<int>& S) {
  int j = phase(seq, delta, S);
  if (j == seq.k()) return std::nullopt;
  // Level j+1 has a class holding > delta variables of S; return the
  // lexicographically smallest delta+1 of them.
  auto classes = neighborhoods(seq, j + 1);
  std::vector<bool> in_s(static_cast<std::size_t>(seq.n), false);
  for (int v : S) in_s[static_cast<std::size_t>(v)] = true;
  std::optional<std::vector<int>> best;
  for (auto& cls : classes) {
    std::vector<int> hits;
    for (int v : cls)
      if (in_s[static_cast<std::size_t>(v)]) hits.push_back(v);
    if (static_cast<int>(hits.size()) <= delta) continue;
    hits.resize(static_cast<std::size_t>(delta) + 1);
    if (!best || hits < *best) best = hits;
  }
  return best;
}

Partition restrict_partition(const Partition& p,
                             const std::vector<int>& subset) {
  if (subset.empty()) throw UsageError("restrict_partition: empty subset");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> rank(static_cast<std::size_t>(p.n), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= p.n)
      throw UsageError("restrict_partition: variable out of range");
    rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> colors;
  for (auto& c : p.colors) {
    std::vector<int> kept;
    for (int v : c)
      if (rank[static_cast<std::size_t>(v)] >= 0)
        kept.push_back(rank[static_cast<std::size_t>(v)]);
    if (!kept.empty()) colors.push_back(std::move(kept));
  }
  return make_partition(static_cast<int>(sorted.size()), std::move(colors));
}

}  // namespace pit
