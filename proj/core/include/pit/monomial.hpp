#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pit {

// Sparse monomial: (variable, exponent) pairs sorted by variable index,
// exponents >= 1. Variables are 0-based throughout the library (1-based only
// in file formats and CLI output).
struct Monomial {
  std::vector<std::pair<int, int>> e;

  bool is_one() const { return e.empty(); }
  int total_degree() const;
  int support_size() const { return static_cast<int>(e.size()); }
  std::vector<int> support() const;
  int degree_of(int v) const;
  bool is_multilinear() const;

  static Monomial one() { return {}; }
  static Monomial var(int v, int exp = 1);
  // Multilinear monomial over the given variable set.
  static Monomial from_support(const std::vector<int>& vars);
  // Multilinear monomial from a bitmask over variables [0, n).
  static Monomial from_mask(std::uint32_t mask);
  // Bitmask of a multilinear monomial (support must fit in 32 variables).
  std::uint32_t to_mask() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mon_mul(const Monomial& a, const Monomial& b);

// Number of variable blocks the monomial touches (block-support).
int block_support(const Monomial& m, const std::vector<std::vector<int>>& blocks);

// Graded lexicographic order: total degree first, then the earliest variable
// with differing exponent decides (larger exponent there = larger monomial).
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct MonomialGradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(a, b);
  }
};

}  // namespace pit
