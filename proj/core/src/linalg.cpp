#include "pit/linalg.hpp"

#include <algorithm>

#include "pit/errors.hpp"
#include "pit/rng.hpp"

namespace pit {

int rank_mod_p(const PrimeField& F,
               std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (auto& r : rows)
    if (r.size() != cols) throw UsageError("rank_mod_p: ragged matrix");
  int rank = 0;
  std::size_t m = rows.size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    std::uint64_t inv = F.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == static_cast<std::size_t>(rank) || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, prow[j]));
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<std::uint64_t>> span_solve(
    const PrimeField& F, const std::vector<std::vector<std::uint64_t>>& basis,
    const std::vector<std::uint64_t>& target) {
  std::size_t dim = target.size();
  for (auto& b : basis)
    if (b.size() != dim) throw UsageError("span_solve: dimension mismatch");
  std::size_t k = basis.size();
  // Augmented system: columns = basis vectors, last column = target.
  std::vector<std::vector<std::uint64_t>> m(
      dim, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < dim; ++c) {
    std::size_t piv = row;
    while (piv < dim && m[piv][c] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(m[row], m[piv]);
    std::uint64_t inv = F.inv(m[row][c]);
    for (std::size_t j = c; j <= k; ++j) m[row][j] = F.mul(m[row][j], inv);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = c; j <= k; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  // Inconsistent if any remaining row reads 0 = nonzero.
  for (std::size_t i = row; i < dim; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<std::uint64_t> coeff(k, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    coeff[pivot_col[r]] = m[r][k];
  return coeff;
}

namespace {

int max_degree(const std::vector<std::vector<TPoly>>& rows) {
  int d = 0;
  for (auto& r : rows)
    for (auto& f : r) d = std::max(d, std::max(0, f.degree()));
  return d;
}

int rank_at(const PrimeField& F, const std::vector<std::vector<TPoly>>& rows,
            std::uint64_t tau) {
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (auto& r : rows) {
    std::vector<std::uint64_t> row;
    row.reserve(r.size());
    for (auto& f : r) row.push_back(tp_eval(F, f, tau));
    m.push_back(std::move(row));
  }
  return rank_mod_p(F, std::move(m));
}

}  // namespace

int rank_ft(const PrimeField& F, const std::vector<std::vector<TPoly>>& rows,
            RankMode mode, std::uint64_t seed, int upper_bound) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (auto& r : rows)
    if (r.size() != cols) throw UsageError("rank_ft: ragged matrix");
  int r_cap = static_cast<int>(std::min(rows.size(), cols));
  if (upper_bound >= 0) r_cap = std::min(r_cap, upper_bound);
  if (r_cap == 0) return 0;

  int best = 0;
  if (mode == RankMode::kEval) {
    SplitMix64 rng(seed ^ 0x72616e6b5f6674ull);
    for (int round = 0; round < 3 && best < r_cap; ++round) {
      std::uint64_t tau = rng.below(F.modulus());
      best = std::max(best, rank_at(F, rows, tau));
    }
    return best;
  }
  // Exact: sweep r_cap * d_max + 1 points; see header for the minor-degree
  // argument. Needs that many distinct field elements.
  std::uint64_t sweep =
      static_cast<std::uint64_t>(r_cap) * static_cast<std::uint64_t>(max_degree(rows)) + 1;
  if (sweep > F.modulus())
    throw SizeLimitError("rank_ft: field too small for exact sweep");
  for (std::uint64_t tau = 0; tau < sweep && best < r_cap; ++tau)
    best = std::max(best, rank_at(F, rows, tau));
  return best;
}

TPoly kronecker_univariate(const PrimeField& F, const SparsePoly& f,
                           std::uint64_t base) {
  TPoly r;
  for (auto& [m, c] : f.terms) {
    unsigned long long deg = 0;
    for (auto& [v, x] : m.e) {
      unsigned long long scale = 1;
      for (int i = 0; i < v; ++i) {
        scale *= base;
        if (scale > (1ull << 40))
          throw SizeLimitError("kronecker_univariate: degree blow-up");
      }
      deg += static_cast<unsigned long long>(x) * scale;
    }
    if (deg > (1ull << 24))
      throw SizeLimitError("kronecker_univariate: degree blow-up");
    if (r.c.size() <= deg) r.c.resize(deg + 1, 0);
    r.c[deg] = F.add(r.c[deg], c);
  }
  tp_trim(r);
  return r;
}

int rank_multivar(const PrimeField& F,
                  const std::vector<std::vector<SparsePoly>>& rows,
                  RankMode mode, std::uint64_t seed, int upper_bound) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int r_cap = static_cast<int>(std::min(rows.size(), cols));
  if (upper_bound >= 0) r_cap = std::min(r_cap, upper_bound);
  // Max per-variable degree over all entries.
  int dv = 0;
  for (auto& r : rows)
    for (auto& f : r)
      for (auto& [m, c] : f.terms)
        for (auto& [v, x] : m.e) dv = std::max(dv, x);
  // An r×r minor has per-variable degree <= r*dv; base must exceed it for the
  // substitution to be injective on the minor's monomials.
  std::uint64_t base = static_cast<std::uint64_t>(r_cap) * dv + 1;
  std::vector<std::vector<TPoly>> urows;
  urows.reserve(rows.size());
  for (auto& r : rows) {
    std::vector<TPoly> row;
    row.reserve(r.size());
    for (auto& f : r) row.push_back(kronecker_univariate(F, f, base));
    urows.push_back(std::move(row));
  }
  return rank_ft(F, urows, mode, seed, upper_bound);
}

}  // namespace pit
