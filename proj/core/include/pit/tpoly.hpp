#pragma once

#include <cstdint>
#include <vector>

#include "pit/field.hpp"

namespace pit {

// Univariate polynomial in the shift variable t over F_p, dense coefficients
// indexed by degree. Normal form: no trailing zero coefficients (the zero
// polynomial has an empty coefficient vector).
struct TPoly {
  std::vector<std::uint64_t> c;

  bool is_zero() const { return c.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c.size()) - 1; }

  static TPoly zero() { return {}; }
  static TPoly constant(std::uint64_t v) {
    TPoly f;
    if (v != 0) f.c = {v};
    return f;
  }
  static TPoly monomial(std::uint64_t coef, int deg);

  friend bool operator==(const TPoly&, const TPoly&) = default;
};

// Strip trailing zeros in place.
void tp_trim(TPoly& f);

TPoly tp_add(const PrimeField& F, const TPoly& a, const TPoly& b);
TPoly tp_sub(const PrimeField& F, const TPoly& a, const TPoly& b);
TPoly tp_neg(const PrimeField& F, const TPoly& a);
TPoly tp_mul(const PrimeField& F, const TPoly& a, const TPoly& b);
TPoly tp_scale(const PrimeField& F, const TPoly& a, std::uint64_t s);
std::uint64_t tp_eval(const PrimeField& F, const TPoly& f, std::uint64_t tau);
// Exact division; throws UsageError if b is zero or does not divide a.
TPoly tp_divexact(const PrimeField& F, const TPoly& a, const TPoly& b);

}  // namespace pit
