#include "pit/basesets.hpp"

#include <algorithm>
#include <cmath>

#include "pit/errors.hpp"

namespace pit {

namespace {

// Working form: colors as raw index lists over the current ground subset,
// paired with the original partition index they came from.
struct RawPart {
  int orig_index;
  std::vector<std::vector<int>> colors;  // sorted colors, by least element
};

RawPart restrict_raw(const RawPart& p, const std::vector<int>& keep_sorted) {
  RawPart r{p.orig_index, {}};
  for (auto& c : p.colors) {
    std::vector<int> kept;
    std::set_intersection(c.begin(), c.end(), keep_sorted.begin(),
                          keep_sorted.end(), std::back_inserter(kept));
    if (!kept.empty()) r.colors.push_back(std::move(kept));
  }
  return r;
}

int ceil_sqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

void recurse(const std::vector<int>& ground,
             const std::vector<RawPart>& parts,
             std::vector<std::vector<int>>& out_sets,
             std::vector<std::vector<int>>& out_orders) {
  if (ground.empty()) return;
  if (parts.size() == 1) {
    out_sets.push_back(ground);
    out_orders.push_back({parts[0].orig_index});
    return;
  }
  int threshold = ceil_sqrt(static_cast<int>(ground.size()));
  const RawPart& head = parts[0];
  std::vector<RawPart> rest(parts.begin() + 1, parts.end());

  std::vector<const std::vector<int>*> small;
  for (auto& color : head.colors) {
    if (static_cast<int>(color.size()) >= threshold) {
      // Big color: recursion base; head becomes the last partition in every
      // order found below (its restriction there is a single color).
      std::vector<RawPart> sub;
      sub.reserve(rest.size());
      for (auto& rp : rest) sub.push_back(restrict_raw(rp, color));
      std::size_t first = out_orders.size();
      recurse(color, sub, out_sets, out_orders);
      for (std::size_t i = first; i < out_orders.size(); ++i)
        out_orders[i].push_back(head.orig_index);
    } else {
      small.push_back(&color);
    }
  }
  // Cross-sections: the a-th smallest element of every small color; head
  // restricted there is all singletons and goes first in every order.
  std::size_t max_small = 0;
  for (auto* c : small) max_small = std::max(max_small, c->size());
  for (std::size_t a = 0; a < max_small; ++a) {
    std::vector<int> cross;
    for (auto* c : small)
      if (a < c->size()) cross.push_back((*c)[a]);
    std::sort(cross.begin(), cross.end());
    std::vector<RawPart> sub;
    sub.reserve(rest.size());
    for (auto& rp : rest) sub.push_back(restrict_raw(rp, cross));
    std::size_t first = out_orders.size();
    recurse(cross, sub, out_sets, out_orders);
    for (std::size_t i = first; i < out_orders.size(); ++i)
      out_orders[i].insert(out_orders[i].begin(), head.orig_index);
  }
}

}  // namespace

BaseSetDecomposition base_sets(const std::vector<Partition>& parts) {
  if (parts.empty()) throw UsageError("base_sets: no partitions");
  int n = parts[0].n;
  for (auto& p : parts)
    if (p.n != n) throw UsageError("base_sets: mismatched ground sets");

  std::vector<int> ground(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) ground[static_cast<std::size_t>(v)] = v;

  std::vector<RawPart> raw;
  raw.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    raw.push_back(RawPart{static_cast<int>(i), parts[i].colors});

  BaseSetDecomposition d;
  d.n = n;
  recurse(ground, raw, d.sets, d.orders);
  return d;
}

}  // namespace pit
