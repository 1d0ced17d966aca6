#include <gtest/gtest.h>

#include <functional>

#include "pit/field.hpp"
#include "pit/linalg.hpp"
#include "pit/monomial.hpp"
#include "pit/mpoly.hpp"
#include "pit/rng.hpp"
#include "pit/tpoly.hpp"

namespace pit {
namespace {

TEST(Field, PrimalityChecked) {
  EXPECT_NO_THROW(PrimeField{7});
  EXPECT_NO_THROW(PrimeField{kDefaultPrime});
  EXPECT_THROW(PrimeField{6}, UsageError);
  EXPECT_THROW(PrimeField{1}, UsageError);
}

TEST(Field, AxiomsOnSampledTriples) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(42);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = rng.below(F.modulus());
    std::uint64_t b = rng.below(F.modulus());
    std::uint64_t c = rng.below(F.modulus());
    EXPECT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    EXPECT_EQ(F.add(a, F.add(b, c)), F.add(F.add(a, b), c));
    if (a != 0) {
      EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    }
    EXPECT_EQ(F.add(a, F.neg(a)), 0u);
  }
}

TEST(Field, ReduceSigned) {
  PrimeField F(7);
  EXPECT_EQ(F.reduce_signed(-1), 6u);
  EXPECT_EQ(F.reduce_signed(-7), 0u);
  EXPECT_EQ(F.reduce_signed(15), 1u);
}

TEST(Rank, IdentityThree) {
  PrimeField F(7);
  EXPECT_EQ(rank_mod_p(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
}

TEST(Rank, AllZeroTwoByFour) {
  PrimeField F(7);
  EXPECT_EQ(rank_mod_p(F, {{0, 0, 0, 0}, {0, 0, 0, 0}}), 0);
}

TEST(Rank, DependentRowsMod7) {
  PrimeField F(7);
  // second row is twice the first
  EXPECT_EQ(rank_mod_p(F, {{1, 2}, {2, 4}}), 1);
}

TEST(Rank, TransposeInvariant) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    std::vector<std::vector<std::uint64_t>> m(r,
                                              std::vector<std::uint64_t>(c));
    std::vector<std::vector<std::uint64_t>> mt(c,
                                               std::vector<std::uint64_t>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::uint64_t v = rng.below(5);  // small values make dependence likely
        m[i][j] = v;
        mt[j][i] = v;
      }
    EXPECT_EQ(rank_mod_p(F, m), rank_mod_p(F, mt));
  }
}

TEST(SpanSolve, TrivialMember) {
  PrimeField F(5);
  auto c = span_solve(F, {{1, 0}}, {3, 0});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<std::uint64_t>{3}));
}

TEST(SpanSolve, OutsideSpan) {
  PrimeField F(5);
  EXPECT_FALSE(span_solve(F, {{1, 0}}, {0, 1}).has_value());
}

TEST(SpanSolve, TwoByTwoMod7) {
  PrimeField F(7);
  auto c = span_solve(F, {{1, 1}, {1, 2}}, {0, 1});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<std::uint64_t>{6, 1}));
}

TEST(SpanSolve, RoundTripRandom) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 1 + rng.below(5), k = 1 + rng.below(4);
    std::vector<std::vector<std::uint64_t>> basis(
        k, std::vector<std::uint64_t>(dim));
    for (auto& b : basis)
      for (auto& v : b) v = rng.below(F.modulus());
    std::vector<std::uint64_t> target(dim, 0);
    for (auto& b : basis) {
      std::uint64_t s = rng.below(F.modulus());
      for (std::size_t i = 0; i < dim; ++i)
        target[i] = F.add(target[i], F.mul(s, b[i]));
    }
    auto c = span_solve(F, basis, target);
    ASSERT_TRUE(c.has_value());
    std::vector<std::uint64_t> recon(dim, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < dim; ++i)
        recon[i] = F.add(recon[i], F.mul((*c)[j], basis[j][i]));
    EXPECT_EQ(recon, target);
  }
}

TEST(SpanSolve, DimensionMismatchThrows) {
  PrimeField F(5);
  EXPECT_THROW(span_solve(F, {{1, 0, 0}}, {1, 0}), UsageError);
}

TEST(TPolyOps, EvalExamples) {
  PrimeField F(7);
  TPoly f;  // t^2 + 1
  f.c = {1, 0, 1};
  EXPECT_EQ(tp_eval(F, f, 2), 5u);
  EXPECT_EQ(tp_eval(F, TPoly::zero(), 3), 0u);
  TPoly t = TPoly::monomial(1, 1);
  EXPECT_EQ(tp_eval(F, t, 4), 4u);
}

TEST(TPolyOps, MulDivRoundTrip) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    TPoly a, b;
    std::size_t da = rng.below(6), db = 1 + rng.below(5);
    a.c.resize(da + 1);
    b.c.resize(db + 1);
    for (auto& v : a.c) v = rng.below(F.modulus());
    for (auto& v : b.c) v = rng.below(F.modulus());
    b.c.back() = 1 + rng.below(F.modulus() - 1);
    tp_trim(a);
    tp_trim(b);
    if (b.is_zero()) continue;
    TPoly prod = tp_mul(F, a, b);
    if (a.is_zero()) {
      EXPECT_TRUE(prod.is_zero());
      continue;
    }
    EXPECT_EQ(tp_divexact(F, prod, b), a);
  }
}

TEST(MonomialOps, GradedLexOrder) {
  Monomial one = Monomial::one();
  Monomial x0 = Monomial::var(0);
  Monomial x1 = Monomial::var(1);
  Monomial x0sq = Monomial::var(0, 2);
  Monomial x0x1 = mon_mul(x0, x1);
  EXPECT_TRUE(graded_lex_less(one, x0));
  EXPECT_TRUE(graded_lex_less(x1, x0));   // same degree, earlier var wins
  EXPECT_TRUE(graded_lex_less(x0, x0sq));
  EXPECT_TRUE(graded_lex_less(x0x1, x0sq));  // deg 2 tie: higher x0 exponent
  EXPECT_FALSE(graded_lex_less(x0, x0));
}

TEST(MonomialOps, MaskRoundTrip) {
  Monomial m = Monomial::from_mask(0b1011);
  EXPECT_EQ(m.support(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(m.to_mask(), 0b1011u);
  EXPECT_TRUE(m.is_multilinear());
}

TEST(MonomialOps, BlockSupport) {
  Monomial m = mon_mul(Monomial::var(0), Monomial::var(3));
  std::vector<std::vector<int>> blocks = {{0, 1}, {2}, {3, 4}};
  EXPECT_EQ(block_support(m, blocks), 2);
  EXPECT_EQ(block_support(Monomial::one(), blocks), 0);
}

TEST(DetSymbolic, IdentityTwo) {
  PrimeField F(7);
  PolyMatrix m(2, 2);
  m.at(0, 0) = SparsePoly::constant(1);
  m.at(1, 1) = SparsePoly::constant(1);
  SparsePoly d = det_symbolic(F, m);
  ASSERT_EQ(d.sparsity(), 1);
  EXPECT_EQ(*d.coeff(Monomial::one()), 1u);
}

TEST(DetSymbolic, SingularConstants) {
  PrimeField F(7);
  // [[2,3],[4,6]]: 2*6 = 3*4
  PolyMatrix m(2, 2);
  m.at(0, 0) = SparsePoly::constant(2);
  m.at(0, 1) = SparsePoly::constant(3);
  m.at(1, 0) = SparsePoly::constant(4);
  m.at(1, 1) = SparsePoly::constant(6);
  EXPECT_TRUE(det_symbolic(F, m).is_zero());
}

TEST(DetSymbolic, TwoVariableExample) {
  PrimeField F(7);
  // [[x1, 1], [1, x2]] -> x1*x2 - 1  (variables 0-based: x0, x1)
  PolyMatrix m(2, 2);
  m.at(0, 0).terms.emplace(Monomial::var(0), 1);
  m.at(0, 1) = SparsePoly::constant(1);
  m.at(1, 0) = SparsePoly::constant(1);
  m.at(1, 1).terms.emplace(Monomial::var(1), 1);
  SparsePoly d = det_symbolic(F, m);
  EXPECT_EQ(d.sparsity(), 2);
  const auto* top = d.coeff(mon_mul(Monomial::var(0), Monomial::var(1)));
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(*top, 1u);
  const auto* c = d.coeff(Monomial::one());
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(*c, F.neg(1));
}

TEST(DetSymbolic, DimensionCap) {
  PrimeField F(7);
  PolyMatrix m(5, 5);
  EXPECT_THROW(det_symbolic(F, m), SizeLimitError);
}

TEST(DetSymbolic, AgreesWithScalarDeterminantAtRandomPoints) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int w = 2 + static_cast<int>(rng.below(3));  // 2..4
    int n = 3;
    PolyMatrix m(w, w);
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) {
        SparsePoly f;
        int nt = static_cast<int>(rng.below(3));
        for (int tctr = 0; tctr < nt; ++tctr) {
          Monomial mono;
          int v = static_cast<int>(rng.below(n));
          mono = Monomial::var(v, 1 + static_cast<int>(rng.below(2)));
          mp_add_term(F, f, mono, rng.below(F.modulus()));
        }
        mp_add_term(F, f, Monomial::one(), rng.below(F.modulus()));
        m.at(i, j) = f;
      }
    SparsePoly d = det_symbolic(F, m);
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n));
    for (auto& v : pt) v = rng.below(F.modulus());
    // scalar determinant by elimination on the evaluated matrix
    std::vector<std::vector<std::uint64_t>> num(
        static_cast<std::size_t>(w),
        std::vector<std::uint64_t>(static_cast<std::size_t>(w)));
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) num[i][j] = mp_eval(F, m.at(i, j), pt);
    // Laplace on scalars (w <= 4, fine)
    std::function<std::uint64_t(std::vector<std::vector<std::uint64_t>>)>
        sdet = [&](std::vector<std::vector<std::uint64_t>> a) -> std::uint64_t {
      std::size_t k = a.size();
      if (k == 1) return a[0][0];
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<std::uint64_t>> sub;
        for (std::size_t i = 1; i < k; ++i) {
          std::vector<std::uint64_t> row;
          for (std::size_t jj = 0; jj < k; ++jj)
            if (jj != j) row.push_back(a[i][jj]);
          sub.push_back(row);
        }
        std::uint64_t term = F.mul(a[0][j], sdet(sub));
        acc = (j % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
      }
      return acc;
    };
    EXPECT_EQ(mp_eval(F, d, pt), sdet(num));
  }
}

TEST(RankFt, ExactMatchesStructuredExample) {
  PrimeField F(kDefaultPrime);
  // rows (1, t), (t, t^2) are dependent; (1, t), (0, 1) are not.
  TPoly one = TPoly::constant(1);
  TPoly t = TPoly::monomial(1, 1);
  TPoly t2 = TPoly::monomial(1, 2);
  EXPECT_EQ(rank_ft(F, {{one, t}, {t, t2}}, RankMode::kExact), 1);
  EXPECT_EQ(rank_ft(F, {{one, t}, {TPoly::zero(), one}}, RankMode::kExact), 2);
  EXPECT_EQ(rank_ft(F, {{one, t}, {t, t2}}, RankMode::kEval, 5), 1);
}

TEST(RankFt, EvalNeverExceedsExact) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(3);
    std::vector<std::vector<TPoly>> rows(r, std::vector<TPoly>(c));
    for (auto& row : rows)
      for (auto& f : row) {
        std::size_t d = rng.below(3);
        f.c.resize(d + 1);
        for (auto& v : f.c) v = rng.below(4);
        tp_trim(f);
      }
    int exact = rank_ft(F, rows, RankMode::kExact);
    int eval = rank_ft(F, rows, RankMode::kEval, trial);
    EXPECT_LE(eval, exact);
    EXPECT_GE(exact, 0);
  }
}

TEST(RankMultivar, TwoVariableDependence) {
  PrimeField F(kDefaultPrime);
  // rows (1, t0), (t1, t0*t1) dependent; (1, t0), (t1, 1) independent.
  SparsePoly one = SparsePoly::constant(1);
  SparsePoly t0, t1, t01;
  t0.terms.emplace(Monomial::var(0), 1);
  t1.terms.emplace(Monomial::var(1), 1);
  t01.terms.emplace(mon_mul(Monomial::var(0), Monomial::var(1)), 1);
  EXPECT_EQ(rank_multivar(F, {{one, t0}, {t1, t01}}, RankMode::kExact), 1);
  EXPECT_EQ(rank_multivar(F, {{one, t0}, {t1, one}}, RankMode::kExact), 2);
}

}  // namespace
}  // namespace pit
