#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pit/field.hpp"
#include "pit/mpoly.hpp"
#include "pit/tpoly.hpp"

namespace pit {

// F_p rank via exact Gaussian elimination. Rows may be ragged-free (all the
// same length); an empty matrix has rank 0.
int rank_mod_p(const PrimeField& F,
               std::vector<std::vector<std::uint64_t>> rows);

// Coefficients expressing target in the span of basis, or nullopt if the
// target is outside it. All vectors must share one length.
std::optional<std::vector<std::uint64_t>> span_solve(
    const PrimeField& F, const std::vector<std::vector<std::uint64_t>>& basis,
    const std::vector<std::uint64_t>& target);

// How rank over the rational-function field F_p(t) is computed.
//   kEval:  evaluate t at 3 seeded random points, take the max rank. Sound as
//           a lower bound (evaluation can only drop rank) and correct with
//           high probability.
//   kExact: deterministic sweep t = 0, 1, 2, ... of length r_cap*d_max + 1,
//           where d_max is the max entry degree and r_cap bounds the rank.
//           Any r×r minor is a t-polynomial of degree <= r*d_max, so if the
//           true rank is r some sweep point must realize it; the max over the
//           sweep is therefore the exact rank. Early exit once r_cap is hit.
enum class RankMode { kEval, kExact };

// Rank of a matrix with entries in F_p[t]. upper_bound, when >= 0, must be a
// genuine bound on the rank (it shortens the exact sweep and allows early
// exit).
int rank_ft(const PrimeField& F, const std::vector<std::vector<TPoly>>& rows,
            RankMode mode, std::uint64_t seed = 0, int upper_bound = -1);

// Substitute the multivariate t-variables of a SparsePoly by powers of a
// single t (t_i -> t^(base^i)). With base greater than every per-variable
// degree that can appear in an r×r minor, the substitution preserves matrix
// rank over the function field, reducing multivariate rank to rank_ft.
TPoly kronecker_univariate(const PrimeField& F, const SparsePoly& f,
                           std::uint64_t base);

// Rank of a matrix whose entries are polynomials in several t-variables
// (entries as SparsePoly over those variables).
int rank_multivar(const PrimeField& F,
                  const std::vector<std::vector<SparsePoly>>& rows,
                  RankMode mode, std::uint64_t seed = 0, int upper_bound = -1);

}  // namespace pit
