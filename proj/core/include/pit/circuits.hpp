#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pit/field.hpp"
#include "pit/kronecker.hpp"
#include "pit/mpoly.hpp"
#include "pit/partitions.hpp"

namespace pit {

// b0 + sum_r coef_r * x_r. Terms sorted by variable, coefficients nonzero.
struct LinearForm {
  std::uint64_t b0 = 0;
  std::vector<std::pair<int, std::uint64_t>> terms;

  std::vector<int> support() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// C(x) = sum_i top[i] * prod_j gates[i][j](x). Within one gate the form
// supports are pairwise disjoint, so every gate product is multilinear.
struct Depth3Circuit {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> top;
  std::vector<std::vector<LinearForm>> gates;

  friend bool operator==(const Depth3Circuit&, const Depth3Circuit&) = default;
};

// Throws UsageError naming the offending gate index on a multilinearity
// violation, a variable out of range, or a shape mismatch.
void validate_depth3(const Depth3Circuit& c);

// (value, dvec): dvec[i] = gate i's product at the point,
// value = sum_i top[i] * dvec[i].
std::pair<std::uint64_t, std::vector<std::uint64_t>> eval_depth3(
    const Depth3Circuit& c, const std::vector<std::uint64_t>& point);

// Gate i's partition of [0,n): nonempty form supports as colors, unmentioned
// variables completed as singleton colors.
std::vector<Partition> induced_partitions(const Depth3Circuit& c);

// After the substitution x_r -> x_r + phi(t_r) each form constant becomes
// b0 + sum_r coef_r * phi(t_r): a sparse polynomial in the map's m shift
// variables. Variable coefficients are unchanged.
struct ShiftedForm {
  SparsePoly b0;
  std::vector<std::pair<int, std::uint64_t>> terms;
};

struct ShiftedDepth3 {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  int k = 0;
  int m = 1;  // shift variables
  std::vector<std::uint64_t> top;
  std::vector<std::vector<ShiftedForm>> gates;
};

ShiftedDepth3 shift_depth3(const Depth3Circuit& c, const MonomialMap& map);

std::uint64_t eval_shifted_depth3(const ShiftedDepth3& c,
                                  const std::vector<std::uint64_t>& x,
                                  const std::vector<std::uint64_t>& t);

// Read-once branching program C(x) = left * inner[0] * ... * inner[d-1] * right
// with left 1xw over blocks[0], inner[i] wxw over blocks[i+1], right wx1 over
// blocks[d+1]. Blocks are sorted, pairwise disjoint, and cover [0,n); empty
// blocks are allowed (constant factors).
struct Roabp {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  int w = 1;
  int d = 0;
  std::vector<std::vector<int>> blocks;
  PolyMatrix left;
  std::vector<PolyMatrix> inner;
  PolyMatrix right;
  // Declared per-factor bounds (metadata, checked by validate_roabp but not
  // part of structural equality): max entry total degree, distinct monomials
  // per factor, max monomial support size.
  int delta = 0;
  int s = 1;
  int mu = 0;

  friend bool operator==(const Roabp& a, const Roabp& b) {
    return a.p == b.p && a.n == b.n && a.w == b.w && a.d == b.d &&
           a.blocks == b.blocks && a.left == b.left && a.inner == b.inner &&
           a.right == b.right;
  }
};

struct FactorStats {
  int degree = 0;     // max entry total degree
  int sparsity = 0;   // distinct monomials across the factor's entries
  int max_support = 0;
};

FactorStats factor_stats(const PolyMatrix& f);

// Tightest bounds holding for every factor (boundaries included).
FactorStats roabp_stats(const Roabp& r);

// Throws UsageError naming the offending factor on shape mismatches, block
// violations, or a declared bound that some factor exceeds.
void validate_roabp(const Roabp& r);

std::uint64_t eval_roabp(const Roabp& r, const std::vector<std::uint64_t>& point);

struct ShiftedRoabp {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  int w = 1;
  int d = 0;
  int m = 1;  // shift variables
  std::vector<std::vector<int>> blocks;
  MatrixOf<SparsePoly> left;
  std::vector<MatrixOf<SparsePoly>> inner;
  MatrixOf<SparsePoly> right;
};

ShiftedRoabp shift_roabp(const Roabp& r, const MonomialMap& map);

std::uint64_t eval_shifted_roabp(const ShiftedRoabp& r,
                                 const std::vector<std::uint64_t>& x,
                                 const std::vector<std::uint64_t>& t);

// Random circuit whose induced partition sequence (in gate order) has
// distance <= delta; top coefficients nonzero; generate-and-verify.
// Same seed, same parameters -> identical circuit.
Depth3Circuit random_depth3(std::uint64_t p, int n, int k, int delta,
                            std::uint64_t seed);

// Random ROABP honoring the declared bounds. With invertible set, inner
// factors are resampled until det_symbolic is nonzero (needs w <= 4).
Roabp random_roabp(std::uint64_t p, int n, int d, int w, int delta, int s,
                   int mu, bool invertible, std::uint64_t seed);

}  // namespace pit
