#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pit/field.hpp"
#include "pit/monomial.hpp"
#include "pit/tpoly.hpp"

namespace pit {

// Coefficient traits shared by F_p scalars and TPoly coefficients.
template <class C>
struct coef_traits;

template <>
struct coef_traits<std::uint64_t> {
  static bool is_zero(std::uint64_t x) { return x == 0; }
  static std::uint64_t add(const PrimeField& F, std::uint64_t a,
                           std::uint64_t b) {
    return F.add(a, b);
  }
  static std::uint64_t mul(const PrimeField& F, std::uint64_t a,
                           std::uint64_t b) {
    return F.mul(a, b);
  }
  static std::uint64_t neg(const PrimeField& F, std::uint64_t a) {
    return F.neg(a);
  }
};

template <>
struct coef_traits<TPoly> {
  static bool is_zero(const TPoly& x) { return x.is_zero(); }
  static TPoly add(const PrimeField& F, const TPoly& a, const TPoly& b) {
    return tp_add(F, a, b);
  }
  static TPoly mul(const PrimeField& F, const TPoly& a, const TPoly& b) {
    return tp_mul(F, a, b);
  }
  static TPoly neg(const PrimeField& F, const TPoly& a) { return tp_neg(F, a); }
};

// Sparse multivariate polynomial with coefficients C (F_p residues or TPoly).
// Terms are kept in graded-lex order with no zero coefficients, which makes
// iteration order — and therefore serialization — canonical.
template <class C>
struct MPoly {
  std::map<Monomial, C, MonomialGradedLess> terms;

  bool is_zero() const { return terms.empty(); }
  int sparsity() const { return static_cast<int>(terms.size()); }
  int total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, m.total_degree());
    return d;
  }
  // Maximum support size over the terms (the paper's mu).
  int max_support() const {
    int s = 0;
    for (auto& [m, c] : terms) s = std::max(s, m.support_size());
    return s;
  }
  const C* coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? nullptr : &it->second;
  }

  static MPoly constant(C c) {
    MPoly f;
    if (!coef_traits<C>::is_zero(c)) f.terms.emplace(Monomial::one(), c);
    return f;
  }

  friend bool operator==(const MPoly&, const MPoly&) = default;
};

using SparsePoly = MPoly<std::uint64_t>;   // coefficients in F_p
using SparsePolyT = MPoly<TPoly>;          // coefficients in F_p[t]

template <class C>
void mp_add_term(const PrimeField& F, MPoly<C>& f, const Monomial& m,
                 const C& c) {
  if (coef_traits<C>::is_zero(c)) return;
  auto [it, fresh] = f.terms.emplace(m, c);
  if (!fresh) {
    it->second = coef_traits<C>::add(F, it->second, c);
    if (coef_traits<C>::is_zero(it->second)) f.terms.erase(it);
  }
}

template <class C>
MPoly<C> mp_add(const PrimeField& F, const MPoly<C>& a, const MPoly<C>& b) {
  MPoly<C> r = a;
  for (auto& [m, c] : b.terms) mp_add_term(F, r, m, c);
  return r;
}

template <class C>
MPoly<C> mp_neg(const PrimeField& F, const MPoly<C>& a) {
  MPoly<C> r = a;
  for (auto& [m, c] : r.terms) c = coef_traits<C>::neg(F, c);
  return r;
}

template <class C>
MPoly<C> mp_sub(const PrimeField& F, const MPoly<C>& a, const MPoly<C>& b) {
  return mp_add(F, a, mp_neg(F, b));
}

template <class C>
MPoly<C> mp_mul(const PrimeField& F, const MPoly<C>& a, const MPoly<C>& b) {
  MPoly<C> r;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms)
      mp_add_term(F, r, mon_mul(ma, mb), coef_traits<C>::mul(F, ca, cb));
  return r;
}

template <class C>
MPoly<C> mp_scale(const PrimeField& F, const MPoly<C>& a, const C& s) {
  MPoly<C> r;
  for (auto& [m, c] : a.terms)
    mp_add_term(F, r, m, coef_traits<C>::mul(F, c, s));
  return r;
}

// Coefficients that are themselves sparse polynomials (in shift variables):
// lets MPoly<SparsePoly> represent x-polynomials with t-polynomial
// coefficients after a multi-variable shift.
template <>
struct coef_traits<SparsePoly> {
  static bool is_zero(const SparsePoly& x) { return x.is_zero(); }
  static SparsePoly add(const PrimeField& F, const SparsePoly& a,
                        const SparsePoly& b) {
    return mp_add(F, a, b);
  }
  static SparsePoly mul(const PrimeField& F, const SparsePoly& a,
                        const SparsePoly& b) {
    return mp_mul(F, a, b);
  }
  static SparsePoly neg(const PrimeField& F, const SparsePoly& a) {
    return mp_neg(F, a);
  }
};

// Evaluate an F_p-coefficient polynomial at a full point.
std::uint64_t mp_eval(const PrimeField& F, const SparsePoly& f,
                      const std::vector<std::uint64_t>& point);

// Rectangular matrix of sparse polynomials (factor matrices; boundary factors
// use 1×w / w×1 shapes).
template <class C>
struct MatrixOf {
  int rows = 0, cols = 0;
  std::vector<MPoly<C>> a;  // row-major, rows*cols entries

  MatrixOf() = default;
  MatrixOf(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  MPoly<C>& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const MPoly<C>& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  friend bool operator==(const MatrixOf&, const MatrixOf&) = default;
};

using PolyMatrix = MatrixOf<std::uint64_t>;

template <class C>
MatrixOf<C> mat_mul(const PrimeField& F, const MatrixOf<C>& x,
                    const MatrixOf<C>& y) {
  MatrixOf<C> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      MPoly<C> acc;
      for (int k = 0; k < x.cols; ++k)
        acc = mp_add(F, acc, mp_mul(F, x.at(i, k), y.at(k, j)));
      r.at(i, j) = std::move(acc);
    }
  return r;
}

// Exact symbolic determinant by cofactor expansion; square, dimension <= 4.
SparsePoly det_symbolic(const PrimeField& F, const PolyMatrix& m);

}  // namespace pit
