#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pit/circuits.hpp"

namespace pit {

// Coefficient table: x-monomial -> dim coordinates, each a polynomial in
// tvars shift variables (constant polynomials when tvars == 0). Rows exist
// only for monomials with some nonzero coordinate.
struct VecTable {
  int n = 0;
  int dim = 1;
  int tvars = 0;
  std::map<Monomial, std::vector<SparsePoly>, MonomialGradedLess> rows;

  const std::vector<SparsePoly>* row(const Monomial& m) const {
    auto it = rows.find(m);
    return it == rows.end() ? nullptr : &it->second;
  }
};

// Expansion is a desk-scale oracle; every intermediate product is capped.
inline constexpr std::size_t kExpandCap = std::size_t{1} << 20;

// Multilinear gate table of D(x): dim = k, one coordinate per gate. n <= 20.
VecTable expand_depth3(const Depth3Circuit& c);
VecTable expand_shifted_depth3(const ShiftedDepth3& c);

// Scalar table (dim = 1) of the full ROABP product.
VecTable expand_roabp(const Roabp& r);
VecTable expand_shifted_roabp(const ShiftedRoabp& r);

// w*w-dimensional table of the interior product inner[0] * ... * inner[d-1],
// cells row-major, for block-concentration checks. d = 0 gives the identity.
VecTable expand_roabp_interior(const Roabp& r);
VecTable expand_shifted_roabp_interior(const ShiftedRoabp& r);

// Collapse a gate table to the circuit's scalar table: row -> top^T * row.
VecTable scalar_from_gate_table(const PrimeField& F, const VecTable& t,
                                const std::vector<std::uint64_t>& top);

// Evaluate a scalar plain table (dim == 1, tvars == 0) at a point.
std::uint64_t table_eval(const PrimeField& F, const VecTable& t,
                         const std::vector<std::uint64_t>& point);

}  // namespace pit
