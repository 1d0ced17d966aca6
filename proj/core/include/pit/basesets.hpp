#pragma once

#include <vector>

#include "pit/partitions.hpp"

namespace pit {

// Decomposition of the ground set into base sets, each carrying an ordering
// of the input partitions under which the restricted sequence has distance 1.
struct BaseSetDecomposition {
  int n = 0;
  std::vector<std::vector<int>> sets;    // disjoint, cover [0, n), each sorted
  std::vector<std::vector<int>> orders;  // per set: permutation of [0, c)
};

// Recursive split over c partitions of a common ground set:
//   - colors of the first partition of size >= ceil(sqrt(|G|)) become
//     recursion bases (first partition moves to the back of the order);
//   - the remaining small colors contribute their a-th smallest elements to
//     cross-sections, one recursion base per a (first partition, now all
//     singletons, moves to the front).
// Guarantees: sets partition [0, n); every restricted reordered sequence has
// distance 1; the number of sets is < 2^(c-1) * n^(1 - 1/2^(c-1)).
// c = 1 yields the trivial decomposition {[0, n)}.
BaseSetDecomposition base_sets(const std::vector<Partition>& parts);

}  // namespace pit
