#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pit/circuits.hpp"
#include "pit/codec.hpp"

namespace pit {

// Ground truth by full expansion: zero iff every coefficient vanishes.
// Subject to the expansion caps, so desk-scale instances only. Every other
// verdict in the repository is measured against these.
Verdict brute_pit(const Depth3Circuit& c);
Verdict brute_pit(const Roabp& r);

struct SZResult {
  Verdict verdict;
  // For a zero verdict: P[C != 0 but all trials hit roots] <= (deg/p)^trials.
  // Nonzero verdicts are certain, bound 0.
  double failure_bound = 0.0;
};

// Random-evaluation identity test: `trials` uniform points; nonzero on the
// first nonzero value. Requires total_degree_bound < p.
SZResult schwartz_zippel(
    const std::function<std::uint64_t(const std::vector<std::uint64_t>&)>&
        evaluate,
    std::uint64_t p, int n, int total_degree_bound, int trials,
    std::uint64_t seed);

}  // namespace pit
