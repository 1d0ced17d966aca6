#pragma once

#include <cstdint>
#include <vector>

#include "pit/basesets.hpp"
#include "pit/monomial.hpp"

namespace pit {

// Monomial map x_v -> t_{target[v]}^{exp[v]}. Single-target maps have m = 1.
// Stream maps use exp[v] = base^rank(v) mod q, where rank is the variable's
// position within its target's source-variable group and q is that target's
// source prime.
struct MonomialMap {
  int n = 0;                        // source variables
  int m = 1;                        // target variables
  std::vector<int> target;          // size n, values in [0, m)
  std::vector<std::uint64_t> q;     // size m, source prime per target
  std::vector<std::uint64_t> base;  // size m, naive exponent base (d+1)
  std::vector<std::uint64_t> exp;   // size n, 0 <= exp[v] < q[target[v]]
};

// Lazy first-N-primes candidate stream (2, 3, 5, ...). Reconstructible from
// scratch, so the emitted count is the only state.
class PrimeStream {
 public:
  std::uint64_t next();
  std::uint64_t emitted() const { return primes_.size(); }

 private:
  std::vector<std::uint64_t> primes_;
};

// Candidate budget N = ceil(n * d * a^2 * log2(d+1)), minimum 1.
std::uint64_t lemma_candidate_count(int n, int d, std::uint64_t a);

// Exponent cap for maps drawn within an N-candidate budget:
// ceil(N * log2(max(N, 2))).
std::uint64_t stream_degree_bound(std::uint64_t N);

// The naive-mod-prime map for one prime: exp[v] = (d+1)^v mod q, single target.
MonomialMap stream_map(int n, int d, std::uint64_t q);

// Image of mon under the map: per target variable the exact integer
// sum of deg_v(mon) * exp[v] (no modulus).
std::vector<unsigned __int128> map_image(const MonomialMap& map,
                                         const Monomial& mon);

// True iff all image vectors are pairwise distinct.
bool separates(const MonomialMap& map, const std::vector<Monomial>& mons);

// All monomials over vars with support size <= support_cap and per-variable
// degree in [1, d]; includes the constant monomial. Throws SizeLimitError if
// the family exceeds limit.
std::vector<Monomial> enumerate_support_bounded(
    const std::vector<int>& vars, int support_cap, int d,
    std::size_t limit = std::size_t{1} << 22);

// First stream map that separates mons, searched within the candidate budget
// for a = max(1, |mons|). tried, when given, reports candidates consumed.
MonomialMap find_separating_map(const std::vector<Monomial>& mons, int n, int d,
                                std::uint64_t* tried = nullptr);

// Independent per-base-set maps: variables of decomp.sets[i] target t_i, and
// each axis is verified to separate every monomial of support <= support_cap
// and per-variable degree <= d inside its own set. Distinct monomials whose
// per-set restrictions stay within that family then get distinct joint images.
MonomialMap multi_base_map(const BaseSetDecomposition& decomp, int support_cap,
                           int d);

}  // namespace pit
