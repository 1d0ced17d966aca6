#include "pit/oracle.hpp"

#include <cmath>

#include "pit/errors.hpp"
#include "pit/expand.hpp"
#include "pit/rng.hpp"

namespace pit {

Verdict brute_pit(const Depth3Circuit& c) {
  PrimeField F(c.p);
  auto t = scalar_from_gate_table(F, expand_depth3(c), c.top);
  Verdict v;
  v.zero = t.rows.empty();
  return v;
}

Verdict brute_pit(const Roabp& r) {
  Verdict v;
  v.zero = expand_roabp(r).rows.empty();
  return v;
}

SZResult schwartz_zippel(
    const std::function<std::uint64_t(const std::vector<std::uint64_t>&)>&
        evaluate,
    std::uint64_t p, int n, int total_degree_bound, int trials,
    std::uint64_t seed) {
  PrimeField F(p);
  if (n < 1) throw UsageError("need at least one variable");
  if (total_degree_bound < 0) throw UsageError("negative degree bound");
  if (static_cast<std::uint64_t>(total_degree_bound) >= p)
    throw UsageError("degree bound must be below the field size");
  if (trials < 1) throw UsageError("need at least one trial");
  SplitMix64 rng(seed);
  SZResult res;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n));
    for (auto& x : pt) x = rng.next() % p;
    if (evaluate(pt) != 0) {
      res.verdict.zero = false;
      res.verdict.witness = std::move(pt);
      res.failure_bound = 0.0;
      return res;
    }
  }
  res.verdict.zero = true;
  res.failure_bound = std::pow(
      static_cast<double>(total_degree_bound) / static_cast<double>(p),
      static_cast<double>(trials));
  return res;
}

}  // namespace pit
