#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pit/expand.hpp"
#include "pit/linalg.hpp"
#include "pit/monomial.hpp"

namespace pit {

// Outcome of a concentration check: whether the low-support rows span the
// whole table, both ranks, and (when they do not) the graded-lex first
// high-support monomial whose coefficient vector falls outside the
// low-support span.
struct ConcReport {
  bool concentrated = false;
  int low_rank = 0;
  int full_rank = 0;
  std::optional<Monomial> witness;
};

// Low-support rank vs full rank of the coefficient table: concentrated iff
// the coefficient vectors of monomials with support < l span every
// coefficient vector. Entries live in F_p[t-vars]; mode picks the rank
// algorithm over the function field.
ConcReport is_l_concentrated(const PrimeField& F, const VecTable& table, int l,
                             RankMode mode = RankMode::kEval,
                             std::uint64_t seed = 0);

// Same check with support measured in whole blocks: low rows are those whose
// monomial touches at most lb - 1 blocks.
ConcReport is_block_concentrated(const PrimeField& F, const VecTable& table,
                                 const std::vector<std::vector<int>>& blocks,
                                 int lb, RankMode mode = RankMode::kEval,
                                 std::uint64_t seed = 0);

// 0/1 subset-incidence matrix: rows are the multilinear monomials of support
// >= l (as bit masks, ordered by (popcount, mask)), columns all 2^n masks in
// ascending order; entry(S,T) = 1 iff T is a subset of S.
struct TransferMatrixNL {
  int n = 0;
  int l = 0;
  std::vector<std::uint64_t> row_masks;

  int rows() const { return static_cast<int>(row_masks.size()); }
  int cols() const { return 1 << n; }
  int entry(int row, std::uint64_t col_mask) const {
    return (col_mask & ~row_masks[static_cast<std::size_t>(row)]) == 0 ? 1 : 0;
  }
};

// Builds the matrix; n <= 12 (the column count is 2^n).
TransferMatrixNL transfer_matrix(int n, int l);

// Minimum Hamming weight over all nonzero row combinations with coefficients
// in the prime field of the given order; exhaustive, so requires
// field_order^rows <= 10^7. The weight bound the construction rests on is
// 2^l.
int check_rowspan_weight(const TransferMatrixNL& m, std::uint64_t field_order);

// True iff the rows of m stay linearly independent over F_p after deleting
// the marked columns (given as masks). At most 2^l - 1 columns may be marked.
bool check_marked_rank(const PrimeField& F, const TransferMatrixNL& m,
                       const std::vector<std::uint64_t>& marked);

// Renders a report as the key=value lines used by the verification CLI.
std::string format_report(const std::string& claim, const std::string& params,
                          const ConcReport& r);

}  // namespace pit
