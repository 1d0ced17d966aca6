#include <gtest/gtest.h>

#include <algorithm>

#include "pit/circuits.hpp"
#include "pit/codec.hpp"
#include "pit/errors.hpp"
#include "pit/expand.hpp"
#include "pit/rng.hpp"

namespace pit {
namespace {

LinearForm lf(std::uint64_t b0, std::vector<std::pair<int, std::uint64_t>> t) {
  LinearForm f;
  f.b0 = b0;
  f.terms = std::move(t);
  return f;
}

// single gate x1 * x2 over two variables
Depth3Circuit product_circuit(std::uint64_t p = 101) {
  Depth3Circuit c;
  c.p = p;
  c.n = 2;
  c.k = 1;
  c.top = {1};
  c.gates = {{lf(0, {{0, 1}}), lf(0, {{1, 1}})}};
  return c;
}

std::vector<std::uint64_t> random_point(SplitMix64& rng, int n,
                                        std::uint64_t p) {
  std::vector<std::uint64_t> pt(static_cast<std::size_t>(n));
  for (auto& v : pt) v = rng.below(p);
  return pt;
}

TEST(EvalDepth3, SingleFormPlusOne) {
  Depth3Circuit c;
  c.p = 101;
  c.n = 1;
  c.k = 1;
  c.top = {1};
  c.gates = {{lf(1, {{0, 1}})}};  // x1 + 1
  auto [value, dvec] = eval_depth3(c, {0});
  EXPECT_EQ(value, 1u);
  EXPECT_EQ(dvec, (std::vector<std::uint64_t>{1}));
}

TEST(EvalDepth3, VanishingFormKillsGate) {
  auto c = product_circuit();
  auto [value, dvec] = eval_depth3(c, {0, 55});
  EXPECT_EQ(value, 0u);
}

TEST(EvalDepth3, MatchesExpansionOnRandomPoints) {
  SplitMix64 rng(7);
  auto c = random_depth3(101, 5, 2, 2, 3);
  auto table = scalar_from_gate_table(PrimeField(c.p), expand_depth3(c), c.top);
  PrimeField F(c.p);
  for (int i = 0; i < 50; ++i) {
    auto pt = random_point(rng, c.n, c.p);
    EXPECT_EQ(eval_depth3(c, pt).first, table_eval(F, table, pt));
  }
}

TEST(ValidateDepth3, NamesGateOnMultilinearityViolation) {
  Depth3Circuit c;
  c.p = 101;
  c.n = 2;
  c.k = 1;
  c.top = {1};
  c.gates = {{lf(0, {{0, 1}}), lf(3, {{0, 2}})}};  // x1 twice in gate 0
  try {
    validate_depth3(c);
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("gate 0"), std::string::npos);
  }
}

TEST(InducedPartitions, SingletonCompletion) {
  Depth3Circuit c;
  c.p = 101;
  c.n = 4;
  c.k = 1;
  c.top = {1};
  c.gates = {{lf(2, {{1, 1}, {3, 5}})}};  // mentions x2, x4 only
  auto parts = induced_partitions(c);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].colors,
            (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));
}

TEST(ExpandDepth3, ProductGate) {
  auto table = expand_depth3(product_circuit());
  EXPECT_EQ(table.rows.size(), 1u);
  auto* row = table.row(Monomial::from_support({0, 1}));
  ASSERT_NE(row, nullptr);
  EXPECT_EQ((*row)[0], SparsePoly::constant(1));
}

TEST(ExpandDepth3, FullSupportOnlyForAllVariablesProduct) {
  // D(x) = c * x1 x2 x3: a single gate of singleton forms
  Depth3Circuit c;
  c.p = 101;
  c.n = 3;
  c.k = 1;
  c.top = {1};
  c.gates = {{lf(0, {{0, 2}}), lf(0, {{1, 3}}), lf(0, {{2, 4}})}};
  auto table = expand_depth3(c);
  ASSERT_EQ(table.rows.size(), 1u);
  auto* row = table.row(Monomial::from_support({0, 1, 2}));
  ASSERT_NE(row, nullptr);
  EXPECT_EQ((*row)[0], SparsePoly::constant(24));
}

TEST(ExpandDepth3, GateTableMatchesEvalDvec) {
  SplitMix64 rng(11);
  auto c = random_depth3(97, 6, 3, 2, 19);
  auto table = expand_depth3(c);
  PrimeField F(c.p);
  for (int trial = 0; trial < 20; ++trial) {
    auto pt = random_point(rng, c.n, c.p);
    auto [value, dvec] = eval_depth3(c, pt);
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(c.k), 0);
    for (const auto& [mon, coords] : table.rows) {
      std::uint64_t mv = 1;
      for (auto [var, deg] : mon.e)
        mv = F.mul(mv, pt[static_cast<std::size_t>(var)]);
      for (int g = 0; g < c.k; ++g) {
        const auto& cp = coords[static_cast<std::size_t>(g)];
        if (!cp.is_zero())
          acc[static_cast<std::size_t>(g)] =
              F.add(acc[static_cast<std::size_t>(g)],
                    F.mul(cp.terms.begin()->second, mv));
      }
    }
    EXPECT_EQ(acc, dvec);
  }
}

TEST(ShiftDepth3, ZeroMapIsIdentity) {
  auto c = product_circuit();
  MonomialMap map;
  map.n = 2;
  map.m = 1;
  map.target = {0, 0};
  map.q = {2};
  map.base = {2};
  map.exp = {0, 0};  // phi = t^0 = 1... not zero; use explicit zero phi below
  // A zero shift is the map with zero coefficients: emulate by shifting and
  // evaluating t at the additive inverse of phi(t), which must recover C.
  auto sc = shift_depth3(c, map);
  SplitMix64 rng(3);
  PrimeField F(c.p);
  for (int i = 0; i < 20; ++i) {
    auto pt = random_point(rng, c.n, c.p);
    // phi(t) = 1 at every variable; evaluating the shifted circuit at
    // x - phi recovers C(x).
    std::vector<std::uint64_t> moved = pt;
    for (auto& v : moved) v = F.sub(v, 1);
    EXPECT_EQ(eval_shifted_depth3(sc, moved, {0}), eval_depth3(c, pt).first);
  }
}

TEST(ShiftDepth3, EvalAgreesWithDirectSubstitution) {
  SplitMix64 rng(23);
  auto c = random_depth3(101, 5, 2, 2, 5);
  auto fam = enumerate_support_bounded({0, 1, 2, 3, 4}, 2, 1);
  auto map = find_separating_map(fam, c.n, 1);
  auto sc = shift_depth3(c, map);
  PrimeField F(c.p);
  for (int i = 0; i < 30; ++i) {
    auto x = random_point(rng, c.n, c.p);
    std::uint64_t tau = rng.below(c.p);
    std::vector<std::uint64_t> moved = x;
    for (int v = 0; v < c.n; ++v)
      moved[static_cast<std::size_t>(v)] =
          F.add(moved[static_cast<std::size_t>(v)],
                F.pow(tau, map.exp[static_cast<std::size_t>(v)]));
    EXPECT_EQ(eval_shifted_depth3(sc, x, {tau}), eval_depth3(c, moved).first);
  }
}

TEST(ShiftDepth3, ProductCircuitGainsConstantTerm) {
  // D = x1 x2 shifted by phi != 0 has constant coefficient prod phi != 0.
  auto c = product_circuit();
  MonomialMap map;
  map.n = 2;
  map.m = 1;
  map.target = {0, 0};
  map.q = {3};
  map.base = {2};
  map.exp = {1, 2};
  auto table = expand_shifted_depth3(shift_depth3(c, map));
  auto* row = table.row(Monomial::one());
  ASSERT_NE(row, nullptr);
  // t^1 * t^2 = t^3
  SparsePoly expect;
  expect.terms.emplace(Monomial::var(0, 3), 1);
  EXPECT_EQ((*row)[0], expect);
}

TEST(RandomDepth3, HonorsDistanceBoundAndDeterminism) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    auto c = random_depth3(kDefaultPrime, 8, 3, 2, seed);
    EXPECT_EQ(c.n, 8);
    EXPECT_EQ(c.k, 3);
    validate_depth3(c);
    EXPECT_LE(distance(make_seq(induced_partitions(c))), 2);
    for (auto a : c.top) EXPECT_NE(a, 0u);
    auto again = random_depth3(kDefaultPrime, 8, 3, 2, seed);
    EXPECT_EQ(serialize_depth3(c), serialize_depth3(again));
  }
  EXPECT_THROW(random_depth3(kDefaultPrime, 4, 2, 5, 1), UsageError);
}

TEST(RandomDepth3, DistanceOneIsSetMultilinearLike) {
  auto c = random_depth3(kDefaultPrime, 6, 3, 1, 9);
  EXPECT_EQ(distance(make_seq(induced_partitions(c))), 1);
}

// --- ROABP ---

Roabp tiny_roabp() {
  // w=2, d=1: left (1, x1), inner [[x2, 1],[0, x2]], right (x3, 1)^T
  Roabp r;
  r.p = 101;
  r.n = 3;
  r.w = 2;
  r.d = 1;
  r.blocks = {{0}, {1}, {2}};
  r.left = PolyMatrix(1, 2);
  r.left.at(0, 0) = SparsePoly::constant(1);
  r.left.at(0, 1).terms.emplace(Monomial::var(0), 1);
  r.inner.emplace_back(2, 2);
  r.inner[0].at(0, 0).terms.emplace(Monomial::var(1), 1);
  r.inner[0].at(0, 1) = SparsePoly::constant(1);
  r.inner[0].at(1, 1).terms.emplace(Monomial::var(1), 1);
  r.right = PolyMatrix(2, 1);
  r.right.at(0, 0).terms.emplace(Monomial::var(2), 1);
  r.right.at(1, 0) = SparsePoly::constant(1);
  r.delta = 1;
  r.s = 2;
  r.mu = 1;
  return r;
}

TEST(EvalRoabp, WidthOneIsAProductOfScalars) {
  Roabp r;
  r.p = 101;
  r.n = 2;
  r.w = 1;
  r.d = 0;
  r.blocks = {{0}, {1}};
  r.left = PolyMatrix(1, 1);
  r.left.at(0, 0).terms.emplace(Monomial::var(0), 1);
  r.right = PolyMatrix(1, 1);
  r.right.at(0, 0).terms.emplace(Monomial::var(1), 1);
  r.delta = 1;
  r.s = 1;
  r.mu = 1;
  validate_roabp(r);
  EXPECT_EQ(eval_roabp(r, {5, 7}), 35u);
}

TEST(EvalRoabp, MatchesExpansionOnRandomPoints) {
  SplitMix64 rng(31);
  auto r = random_roabp(101, 6, 2, 2, 2, 3, 2, false, 17);
  auto table = expand_roabp(r);
  PrimeField F(r.p);
  for (int i = 0; i < 50; ++i) {
    auto pt = random_point(rng, r.n, r.p);
    EXPECT_EQ(eval_roabp(r, pt), table_eval(F, table, pt));
  }
}

TEST(ExpandRoabp, ReadsOffDiagonalEntries) {
  // d=1, inner [[x2,0],[0,1]], boundaries pick out entries directly
  Roabp r;
  r.p = 101;
  r.n = 1;
  r.w = 2;
  r.d = 1;
  r.blocks = {{}, {0}, {}};
  r.left = PolyMatrix(1, 2);
  r.left.at(0, 0) = SparsePoly::constant(1);
  r.left.at(0, 1) = SparsePoly::constant(1);
  r.inner.emplace_back(2, 2);
  r.inner[0].at(0, 0).terms.emplace(Monomial::var(0), 1);
  r.inner[0].at(1, 1) = SparsePoly::constant(1);
  r.right = PolyMatrix(2, 1);
  r.right.at(0, 0) = SparsePoly::constant(1);
  r.right.at(1, 0) = SparsePoly::constant(1);
  r.delta = 1;
  r.s = 2;
  r.mu = 1;
  auto table = expand_roabp(r);
  // C = x1 + 1
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ((*table.row(Monomial::one()))[0], SparsePoly::constant(1));
  EXPECT_EQ((*table.row(Monomial::var(0)))[0], SparsePoly::constant(1));
}

TEST(ExpandRoabp, MatchesNaiveDistributiveExpansion) {
  auto r = tiny_roabp();
  validate_roabp(r);
  PrimeField F(r.p);
  // naive: multiply matrices symbolically via mat_mul
  auto m1 = mat_mul(F, r.left, r.inner[0]);
  auto full = mat_mul(F, m1, r.right);
  auto table = expand_roabp(r);
  EXPECT_EQ(table.rows.size(), full.at(0, 0).terms.size());
  for (auto& [mon, coef] : full.at(0, 0).terms) {
    auto* row = table.row(mon);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ((*row)[0], SparsePoly::constant(coef));
  }
}

TEST(ExpandRoabp, BlockSupportRespectsBlocks) {
  auto r = random_roabp(101, 8, 3, 2, 2, 3, 2, false, 23);
  auto table = expand_roabp(r);
  for (const auto& [mon, coords] : table.rows) {
    // every monomial's variables lie in the union of blocks; per-block
    // sub-monomials have degree within the factor bound
    EXPECT_LE(block_support(mon, r.blocks), r.d + 2);
  }
}

TEST(ExpandRoabpInterior, EntryFactorization) {
  auto r = tiny_roabp();
  auto table = expand_roabp_interior(r);
  EXPECT_EQ(table.dim, 4);
  // interior is just inner[0]: entries read back cell-by-cell
  auto* row = table.row(Monomial::var(1));
  ASSERT_NE(row, nullptr);
  EXPECT_EQ((*row)[0], SparsePoly::constant(1));  // cell (0,0): x2
  EXPECT_EQ((*row)[3], SparsePoly::constant(1));  // cell (1,1): x2
  auto* one_row = table.row(Monomial::one());
  ASSERT_NE(one_row, nullptr);
  EXPECT_EQ((*one_row)[1], SparsePoly::constant(1));  // cell (0,1): 1
}

TEST(ShiftRoabp, EvalAgreesWithDirectSubstitution) {
  SplitMix64 rng(47);
  auto r = random_roabp(101, 6, 2, 2, 2, 3, 2, false, 29);
  auto fam = enumerate_support_bounded({0, 1, 2, 3, 4, 5}, 2, 2);
  auto map = find_separating_map(fam, r.n, 2);
  auto sr = shift_roabp(r, map);
  PrimeField F(r.p);
  for (int i = 0; i < 30; ++i) {
    auto x = random_point(rng, r.n, r.p);
    std::uint64_t tau = rng.below(r.p);
    std::vector<std::uint64_t> moved = x;
    for (int v = 0; v < r.n; ++v)
      moved[static_cast<std::size_t>(v)] =
          F.add(moved[static_cast<std::size_t>(v)],
                F.pow(tau, map.exp[static_cast<std::size_t>(v)]));
    EXPECT_EQ(eval_shifted_roabp(sr, x, {tau}), eval_roabp(r, moved));
  }
}

TEST(RandomRoabp, HonorsDeclaredBounds) {
  auto r = random_roabp(101, 8, 3, 2, 3, 4, 2, false, 31);
  validate_roabp(r);  // includes the declared-bounds check
  auto st = roabp_stats(r);
  EXPECT_LE(st.degree, 3);
  EXPECT_LE(st.sparsity, 4);
  EXPECT_LE(st.max_support, 2);
}

TEST(RandomRoabp, InvertibleFactorsHaveNonzeroDet) {
  auto r = random_roabp(101, 6, 3, 2, 2, 3, 1, true, 37);
  PrimeField F(r.p);
  for (const auto& f : r.inner) EXPECT_FALSE(det_symbolic(F, f).is_zero());
}

TEST(RandomRoabp, WidthOneProductOfBlocks) {
  auto r = random_roabp(101, 5, 2, 1, 2, 2, 1, false, 41);
  EXPECT_EQ(r.w, 1);
  validate_roabp(r);
}

// --- codec ---

TEST(Codec, Depth3SerializeProductCircuit) {
  auto text = serialize_depth3(product_circuit());
  EXPECT_EQ(text,
            "depth3 p=101 n=2 k=1\n"
            "gate a=1\n"
            "form 0 1:1\n"
            "form 0 2:1\n");
}

TEST(Codec, Depth3RejectsMultilinearityNamingGate) {
  std::string text =
      "depth3 p=101 n=2 k=1\n"
      "gate a=1\n"
      "form 0 1:1\n"
      "form 0 1:2\n";
  try {
    parse_depth3(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("gate 0"), std::string::npos);
  }
}

TEST(Codec, Depth3ReportsLineAndColumn) {
  std::string text =
      "depth3 p=101 n=2 k=1\n"
      "gate a=1\n"
      "form 0 bogus:1\n";
  try {
    parse_depth3(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3);
    EXPECT_EQ(e.col, 8);
  }
}

TEST(Codec, Depth3RoundTripFuzz) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    int k = 1 + static_cast<int>(rng.below(3));
    int delta = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    auto c = random_depth3(101, n, k, delta, rng.next());
    auto text = serialize_depth3(c);
    EXPECT_EQ(parse_depth3(text), c);
    EXPECT_EQ(serialize_depth3(parse_depth3(text)), text);
  }
}

TEST(Codec, RoabpRoundTripFuzz) {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    int d = static_cast<int>(rng.below(3));
    int w = 1 + static_cast<int>(rng.below(3));
    auto r = random_roabp(101, n, d, w, 2, 3, 2, false, rng.next());
    auto text = serialize_roabp(r);
    EXPECT_EQ(parse_roabp(text), r);
    EXPECT_EQ(serialize_roabp(parse_roabp(text)), text);
  }
}

TEST(Codec, RoabpCommentsAndBlanksIgnored) {
  auto r = tiny_roabp();
  auto text = "# header comment\n\n" + serialize_roabp(r) + "\n# trailing\n";
  EXPECT_EQ(parse_roabp(text), r);
}

TEST(Codec, SniffDispatch) {
  EXPECT_EQ(sniff_circuit("depth3 p=101 n=1 k=1\ngate a=1\nform 1\n"),
            CircuitKind::kDepth3);
  EXPECT_EQ(sniff_circuit(serialize_roabp(tiny_roabp())), CircuitKind::kRoabp);
  EXPECT_THROW(sniff_circuit("bogus\n"), ParseError);
}

TEST(Codec, HittingSetRoundTrip) {
  HittingSetFile h;
  h.p = 101;
  h.n = 3;
  h.points = {{1, 2, 3}, {0, 0, 0}, {100, 99, 98}};
  auto text = serialize_hitting_set(h);
  EXPECT_EQ(text.substr(0, 34), "hittingset p=101 n=3 count=3\n1,2,3");
  EXPECT_EQ(parse_hitting_set(text), h);
  EXPECT_THROW(parse_hitting_set("hittingset p=101 n=3 count=2\n1,2,3\n"),
               ParseError);
}

TEST(Codec, PartitionRoundTrip) {
  auto part = make_partition(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(serialize_partition(part), "{1,2}{3,4}");
  EXPECT_EQ(parse_partition("{1,2}{3,4}", 4), part);
  EXPECT_THROW(parse_partition("{1,2}{2,3}", 3), ParseError);
}

TEST(Codec, KmapRoundTrip) {
  auto fam = enumerate_support_bounded({0, 1, 2, 3}, 2, 1);
  auto map = find_separating_map(fam, 4, 1);
  auto text = serialize_kmap(map);
  auto back = parse_kmap(text);
  EXPECT_EQ(back.n, map.n);
  EXPECT_EQ(back.m, map.m);
  EXPECT_EQ(back.q, map.q);
  EXPECT_EQ(back.base, map.base);
  EXPECT_EQ(back.target, map.target);
  EXPECT_EQ(back.exp, map.exp);  // exponents reconstructed from ranks
}

TEST(Codec, KmapMultiBaseRoundTrip) {
  BaseSetDecomposition decomp{6, {{0, 2, 4}, {1, 3, 5}}, {{0}, {0}}};
  auto map = multi_base_map(decomp, 2, 1);
  auto back = parse_kmap(serialize_kmap(map));
  EXPECT_EQ(back.q, map.q);
  EXPECT_EQ(back.exp, map.exp);
  EXPECT_EQ(back.target, map.target);
}

TEST(Codec, VerdictRoundTrip) {
  Verdict z;
  EXPECT_EQ(serialize_verdict(z), "verdict=zero witness=-\n");
  EXPECT_EQ(parse_verdict(serialize_verdict(z)), z);
  Verdict nz;
  nz.zero = false;
  nz.witness = {4, 0, 9};
  EXPECT_EQ(serialize_verdict(nz), "verdict=nonzero witness=4,0,9\n");
  EXPECT_EQ(parse_verdict(serialize_verdict(nz)), nz);
}

}  // namespace
}  // namespace pit
