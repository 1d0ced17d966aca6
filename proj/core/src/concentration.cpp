#include "pit/concentration.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pit/errors.hpp"

namespace pit {

namespace {

// Shared body of the two concentration checks, parameterized by the
// low/high split predicate applied to each row monomial.
template <class IsLow>
ConcReport conc_check(const PrimeField& F, const VecTable& table,
                      IsLow is_low, RankMode mode, std::uint64_t seed) {
  std::vector<std::vector<SparsePoly>> low, all;
  std::vector<const Monomial*> high_mons;
  std::vector<const std::vector<SparsePoly>*> high_rows;
  for (const auto& [mon, coords] : table.rows) {
    if (coords.size() != static_cast<std::size_t>(table.dim))
      throw UsageError("mixed coefficient dimensions in table");
    all.push_back(coords);
    if (is_low(mon)) {
      low.push_back(coords);
    } else {
      high_mons.push_back(&mon);
      high_rows.push_back(&coords);
    }
  }
  ConcReport r;
  r.full_rank = rank_multivar(F, all, mode, seed);
  r.low_rank = low.empty()
                   ? 0
                   : rank_multivar(F, low, mode, seed, r.full_rank);
  r.concentrated = r.low_rank == r.full_rank;
  if (!r.concentrated) {
    // graded-lex first high row outside the low span
    for (std::size_t i = 0; i < high_rows.size(); ++i) {
      auto probe = low;
      probe.push_back(*high_rows[i]);
      if (rank_multivar(F, probe, mode, seed, r.low_rank + 1) > r.low_rank) {
        r.witness = *high_mons[i];
        break;
      }
    }
  }
  return r;
}

}  // namespace

ConcReport is_l_concentrated(const PrimeField& F, const VecTable& table, int l,
                             RankMode mode, std::uint64_t seed) {
  if (l < 0) throw UsageError("support threshold must be nonnegative");
  return conc_check(
      F, table, [l](const Monomial& m) { return m.support_size() < l; }, mode,
      seed);
}

ConcReport is_block_concentrated(const PrimeField& F, const VecTable& table,
                                 const std::vector<std::vector<int>>& blocks,
                                 int lb, RankMode mode, std::uint64_t seed) {
  if (blocks.empty()) throw UsageError("block concentration needs a blocking");
  if (lb < 0) throw UsageError("block threshold must be nonnegative");
  return conc_check(
      F, table,
      [&](const Monomial& m) { return block_support(m, blocks) <= lb - 1; },
      mode, seed);
}

TransferMatrixNL transfer_matrix(int n, int l) {
  if (n < 1 || n > 12) throw UsageError("transfer matrix needs 1 <= n <= 12");
  if (l < 0 || l > n) throw UsageError("transfer matrix needs 0 <= l <= n");
  TransferMatrixNL m;
  m.n = n;
  m.l = l;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
    if (std::popcount(mask) >= l) m.row_masks.push_back(mask);
  std::sort(m.row_masks.begin(), m.row_masks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  return m;
}

int check_rowspan_weight(const TransferMatrixNL& m,
                         std::uint64_t field_order) {
  if (field_order < 2 || !is_prime_u64(field_order))
    throw UsageError("field order must be a prime");
  const int rows = m.rows();
  const int cols = m.cols();
  if (rows == 0) throw UsageError("empty transfer matrix");
  double combos = 1;
  for (int i = 0; i < rows; ++i) {
    combos *= static_cast<double>(field_order);
    if (combos > 1e7) throw SizeLimitError("rowspan enumeration too large");
  }
  // Dense 0/1 rows; odometer over coefficient vectors with incremental
  // column-sum updates (one digit changes per step plus rollover resets).
  std::vector<std::vector<std::uint64_t>> dense(
      static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    dense[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c)
      dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
          static_cast<std::uint64_t>(
              m.entry(i, static_cast<std::uint64_t>(c)));
  }
  std::vector<std::uint64_t> digit(static_cast<std::size_t>(rows), 0);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(cols), 0);
  auto add_row = [&](int i, std::uint64_t times) {
    const auto& r = dense[static_cast<std::size_t>(i)];
    for (int c = 0; c < cols; ++c) {
      auto& a = acc[static_cast<std::size_t>(c)];
      a = (a + times * r[static_cast<std::size_t>(c)]) % field_order;
    }
  };
  int best = cols + 1;
  for (;;) {
    // advance the odometer by one
    int i = 0;
    while (i < rows && digit[static_cast<std::size_t>(i)] + 1 == field_order) {
      add_row(i, 1);  // rolling q-1 -> 0 adds one more copy (q = 0 mod q)
      digit[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == rows) break;  // wrapped past the all-(q-1) vector
    ++digit[static_cast<std::size_t>(i)];
    add_row(i, 1);
    int weight = 0;
    for (int c = 0; c < cols; ++c)
      if (acc[static_cast<std::size_t>(c)] != 0) ++weight;
    best = std::min(best, weight);
  }
  return best;
}

bool check_marked_rank(const PrimeField& F, const TransferMatrixNL& m,
                       const std::vector<std::uint64_t>& marked) {
  if (marked.size() >= (1ull << m.l))
    throw UsageError("marked column budget is 2^l - 1");
  std::vector<bool> drop(static_cast<std::size_t>(m.cols()), false);
  for (auto c : marked) {
    if (c >= static_cast<std::uint64_t>(m.cols()))
      throw UsageError("marked column out of range");
    drop[static_cast<std::size_t>(c)] = true;
  }
  std::vector<std::vector<std::uint64_t>> rows(
      static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c)
      if (!drop[static_cast<std::size_t>(c)])
        rows[static_cast<std::size_t>(i)].push_back(static_cast<std::uint64_t>(
            m.entry(i, static_cast<std::uint64_t>(c))));
  return rank_mod_p(F, std::move(rows)) == m.rows();
}

std::string format_report(const std::string& claim, const std::string& params,
                          const ConcReport& r) {
  std::ostringstream out;
  out << "claim=" << claim << '\n';
  if (!params.empty()) out << params << '\n';
  out << "low_rank=" << r.low_rank << '\n';
  out << "full_rank=" << r.full_rank << '\n';
  out << "verdict=" << (r.concentrated ? "PASS" : "FAIL") << '\n';
  if (r.witness) {
    out << "witness=";
    bool first = true;
    for (auto [v, e] : r.witness->e) {
      if (!first) out << '.';
      first = false;
      out << (v + 1) << '^' << e;
    }
    if (r.witness->is_one()) out << '1';
    out << '\n';
  }
  return out.str();
}

}  // namespace pit
