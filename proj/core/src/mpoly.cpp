#include "pit/mpoly.hpp"

#include "pit/errors.hpp"

namespace pit {

std::uint64_t mp_eval(const PrimeField& F, const SparsePoly& f,
                      const std::vector<std::uint64_t>& point) {
  std::uint64_t acc = 0;
  for (auto& [m, c] : f.terms) {
    std::uint64_t term = c;
    for (auto& [v, x] : m.e) {
      if (v < 0 || static_cast<std::size_t>(v) >= point.size())
        throw UsageError("mp_eval: variable index out of range");
      term = F.mul(term, F.pow(point[static_cast<std::size_t>(v)],
                               static_cast<std::uint64_t>(x)));
    }
    acc = F.add(acc, term);
  }
  return acc;
}

namespace {

SparsePoly det_rec(const PrimeField& F, const PolyMatrix& m,
                   std::vector<int>& rows, std::vector<int>& cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  SparsePoly acc;
  int r0 = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const SparsePoly& pivot = m.at(r0, cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t jj = 0; jj < cols.size(); ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    SparsePoly minor = det_rec(F, m, sub_rows, sub_cols);
    SparsePoly term = mp_mul(F, pivot, minor);
    acc = (j % 2 == 0) ? mp_add(F, acc, term) : mp_sub(F, acc, term);
  }
  return acc;
}

}  // namespace

SparsePoly det_symbolic(const PrimeField& F, const PolyMatrix& m) {
  if (m.rows != m.cols) throw UsageError("det_symbolic: matrix not square");
  if (m.rows == 0) throw UsageError("det_symbolic: empty matrix");
  if (m.rows > 4)
    throw SizeLimitError("det_symbolic: dimension > 4 unsupported");
  std::vector<int> rows(static_cast<std::size_t>(m.rows));
  std::vector<int> cols(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) rows[static_cast<std::size_t>(i)] = i,
                                   cols[static_cast<std::size_t>(i)] = i;
  return det_rec(F, m, rows, cols);
}

}  // namespace pit
