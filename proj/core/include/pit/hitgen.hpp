#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pit/basesets.hpp"
#include "pit/circuits.hpp"
#include "pit/codec.hpp"
#include "pit/kronecker.hpp"

namespace pit {

// Parameter block for the generators; the derived quantities are always
// recomputed from the primaries.
struct HSParams {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  int k = 1;      // top fan-in of the depth-3 circuit
  int delta = 1;  // distance promise (depth-3) / factor degree bound (ROABP)
  // ROABP primaries
  int w = 1;   // width
  int d = 0;   // interior factor count
  int s = 1;   // per-factor sparsity bound
  int mu = 0;  // per-factor max monomial support

  int l0() const;           // ceil(log2(k+1))
  int l() const;            // delta + 1 + l0
  int support_cap() const;  // delta * l0, what the shift map must separate
  int l_roabp() const;      // 1 + 2*min{ceil(log2(w^2 s)), mu}
  void validate_depth3_params() const;
  void validate_roabp_params() const;
};

struct HitPoint {
  std::vector<std::uint64_t> x;
  std::string provenance;
};

// Materialized hitting set: points deduplicated keeping the first-seen
// occurrence and its provenance; declared_count is the closed-form stream
// length before deduplication. map is the shift map used (m == 0 when the
// construction has none, e.g. the Lagrange combiner).
struct HittingSet {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t declared_count = 0;
  std::vector<std::vector<std::uint64_t>> points;
  std::vector<std::string> provenance;
  MonomialMap map;

  HittingSetFile to_file() const;
};

// Lazy, deterministic point stream. Generators return streams so a blackbox
// test can short-circuit on the first nonzero evaluation; materialize()
// drains the remainder into a HittingSet and checks the emitted count
// against the declared formula.
class PointStream {
 public:
  using Gen = std::function<std::optional<HitPoint>()>;

  PointStream(std::uint64_t p, int n, std::uint64_t declared, MonomialMap map,
              Gen gen);

  std::optional<HitPoint> next();
  std::uint64_t declared_count() const { return declared_; }
  std::uint64_t pulled() const { return pulled_; }
  std::uint64_t prime() const { return p_; }
  int vars() const { return n_; }
  const MonomialMap& map() const { return map_; }

  HittingSet materialize();

 private:
  std::uint64_t p_;
  int n_;
  std::uint64_t declared_;
  MonomialMap map_;
  Gen gen_;
  std::uint64_t pulled_ = 0;
};

// Closed-form counts used by the declared size formulas.
std::uint64_t binomial_sum_below(int n, int bound);           // sum_{i<bound} C(n,i)
std::uint64_t grid_point_count(int n, int bound, int delta);  // sum (delta+1)^|S|

// All 0/1 vectors with fewer than l ones, ordered by (weight, mask).
std::vector<std::vector<std::uint64_t>> low_support_points(int n, int l);

// Interpolation grid: for every subset S with |S| < l, every assignment of
// values {1..delta+1} to the variables of S (zeros elsewhere). Sufficient to
// recover any coefficient of support < l when per-variable degrees are at
// most delta.
std::vector<std::vector<std::uint64_t>> low_support_points(int n, int l,
                                                           int delta,
                                                           std::uint64_t p);

// Theorem-1 generator: one verified map separating all monomials of support
// <= delta*l0, 0/1 patterns of weight < l, tau sweeping n(q-1)+1 values.
PointStream hs_delta_distance(const HSParams& params);

// Theorem-2 generator: per-base-set maps, 0/1 patterns of weight
// < m(l-1)+1, Cartesian tau grid with |B_i|(q_i-1)+1 values per axis.
PointStream hs_base_sets(const HSParams& params,
                         const BaseSetDecomposition& decomp);

// Theorem-3 generator (invertible-interior promise): one verified map
// separating a universal family covering every admissible det(D_i) monomial
// and all low-support monomials, interpolation-grid patterns of support
// < l_R(w^2+2), tau sweeping the t-degree bound.
PointStream hs_roabp_invertible(const HSParams& params);

// Width-2 factorization: alpha * C = product of invertible-interior pieces.
// A factor that is entirely zero makes C identically zero, reported as the
// distinguished flag rather than a factorization.
struct Width2Factorization {
  bool identically_zero = false;
  SparsePoly alpha;
  std::vector<Roabp> factors;
};
Width2Factorization factor_width2(const Roabp& r);

// Lemma-lagrange combiner: interpolation curve through the points of h at
// nodes 1..|h|, evaluated at m*delta_bound*|h|+1 distinct u values. Catches
// any product of <= m polynomials of degree <= delta_bound each hit by h.
PointStream lagrange_combine(const HittingSet& h, int m, int delta_bound);

// Width-2 generator without the invertibility promise: the invertible-piece
// family composed through the Lagrange combiner with m = d+1 pieces of
// degree <= (d+2)*delta.
PointStream hs_width2(const HSParams& params);

// Whitebox test for sums of set-multilinear circuits: deduplicates the
// induced partitions (at most max_c distinct ones), decomposes into base
// sets, and runs the Theorem-2 generator with delta = 1.
Verdict whitebox_sum_setmult(const Depth3Circuit& c, int max_c);

// Evaluate the blackbox on every stream point until one is nonzero. The
// scan is sequential, so the reported witness is provenance-least.
struct BlackboxResult {
  Verdict verdict;
  std::string provenance;       // of the witness, empty for zero verdicts
  std::uint64_t scanned = 0;
};
BlackboxResult blackbox_test(
    const std::function<std::uint64_t(const std::vector<std::uint64_t>&)>&
        evaluate,
    PointStream& stream);

}  // namespace pit
