#include "pit/circuits.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "pit/errors.hpp"
#include "pit/rng.hpp"

namespace pit {

namespace {

void shuffle_ints(std::vector<int>& v, SplitMix64& rng) {
  for (std::size_t j = v.size(); j > 1; --j)
    std::swap(v[j - 1], v[rng.below(j)]);
}

// phi(t_r) for one source variable: the t-monomial the map assigns to it.
SparsePoly phi_poly(const MonomialMap& map, int v) {
  auto sv = static_cast<std::size_t>(v);
  std::uint64_t e = map.exp[sv];
  if (e > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw SizeLimitError("shift exponent too large");
  SparsePoly f;
  if (e == 0)
    f.terms.emplace(Monomial::one(), 1);
  else
    f.terms.emplace(Monomial::var(map.target[sv], static_cast<int>(e)), 1);
  return f;
}

void check_map_covers(const MonomialMap& map, int n) {
  if (map.n != n) throw UsageError("shift map domain mismatch");
  for (int v = 0; v < n; ++v) {
    int b = map.target[static_cast<std::size_t>(v)];
    if (b < 0 || b >= map.m) throw UsageError("shift map misses a variable");
  }
}

// Rows of Pascal's triangle mod p, up to n choose *.
std::vector<std::uint64_t> binomial_row(const PrimeField& F, int n) {
  std::vector<std::uint64_t> row{1 % F.modulus()};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 0);
    next[0] = 1 % F.modulus();
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] =
          F.add(row[static_cast<std::size_t>(j - 1)],
                row[static_cast<std::size_t>(j)]);
    next[static_cast<std::size_t>(i)] = 1 % F.modulus();
    row = std::move(next);
  }
  return row;
}

}  // namespace

std::vector<int> LinearForm::support() const {
  std::vector<int> s;
  s.reserve(terms.size());
  for (auto& [v, c] : terms) s.push_back(v);
  return s;
}

void validate_depth3(const Depth3Circuit& c) {
  if (c.n < 0 || c.k < 1) throw UsageError("depth3 needs n >= 0, k >= 1");
  if (static_cast<int>(c.top.size()) != c.k ||
      static_cast<int>(c.gates.size()) != c.k)
    throw UsageError("depth3 gate count mismatch");
  PrimeField F(c.p);
  for (int i = 0; i < c.k; ++i) {
    std::vector<char> used(static_cast<std::size_t>(c.n), 0);
    for (const auto& form : c.gates[static_cast<std::size_t>(i)]) {
      int prev = -1;
      for (auto [v, coef] : form.terms) {
        if (v < 0 || v >= c.n)
          throw UsageError("gate " + std::to_string(i) +
                           ": variable out of range");
        if (v <= prev)
          throw UsageError("gate " + std::to_string(i) +
                           ": form terms not sorted");
        prev = v;
        if (coef == 0 || coef >= c.p)
          throw UsageError("gate " + std::to_string(i) +
                           ": coefficient not a nonzero residue");
        if (used[static_cast<std::size_t>(v)])
          throw UsageError("gate " + std::to_string(i) + ": variable " +
                           std::to_string(v + 1) +
                           " appears in two forms (multilinearity)");
        used[static_cast<std::size_t>(v)] = 1;
      }
      if (form.b0 >= c.p)
        throw UsageError("gate " + std::to_string(i) +
                         ": constant not a residue");
    }
    if (c.top[static_cast<std::size_t>(i)] >= c.p)
      throw UsageError("top coefficient not a residue");
  }
}

std::pair<std::uint64_t, std::vector<std::uint64_t>> eval_depth3(
    const Depth3Circuit& c, const std::vector<std::uint64_t>& point) {
  if (static_cast<int>(point.size()) != c.n)
    throw UsageError("point length mismatch");
  PrimeField F(c.p);
  std::vector<std::uint64_t> dvec(static_cast<std::size_t>(c.k), 0);
  std::uint64_t value = 0;
  for (int i = 0; i < c.k; ++i) {
    std::uint64_t prod = 1 % c.p;
    for (const auto& form : c.gates[static_cast<std::size_t>(i)]) {
      std::uint64_t v = form.b0;
      for (auto [var, coef] : form.terms)
        v = F.add(v, F.mul(coef, point[static_cast<std::size_t>(var)]));
      prod = F.mul(prod, v);
    }
    dvec[static_cast<std::size_t>(i)] = prod;
    value = F.add(value, F.mul(c.top[static_cast<std::size_t>(i)], prod));
  }
  return {value, dvec};
}

std::vector<Partition> induced_partitions(const Depth3Circuit& c) {
  std::vector<Partition> parts;
  parts.reserve(static_cast<std::size_t>(c.k));
  for (const auto& gate : c.gates) {
    std::vector<std::vector<int>> colors;
    std::vector<char> used(static_cast<std::size_t>(c.n), 0);
    for (const auto& form : gate) {
      auto s = form.support();
      if (s.empty()) continue;
      for (int v : s) used[static_cast<std::size_t>(v)] = 1;
      colors.push_back(std::move(s));
    }
    for (int v = 0; v < c.n; ++v)
      if (!used[static_cast<std::size_t>(v)]) colors.push_back({v});
    parts.push_back(make_partition(c.n, std::move(colors)));
  }
  return parts;
}

ShiftedDepth3 shift_depth3(const Depth3Circuit& c, const MonomialMap& map) {
  validate_depth3(c);
  check_map_covers(map, c.n);
  PrimeField F(c.p);
  ShiftedDepth3 out;
  out.p = c.p;
  out.n = c.n;
  out.k = c.k;
  out.m = map.m;
  out.top = c.top;
  out.gates.resize(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    for (const auto& form : c.gates[i]) {
      ShiftedForm sf;
      sf.b0 = SparsePoly::constant(form.b0);
      for (auto [v, coef] : form.terms)
        sf.b0 = mp_add(F, sf.b0, mp_scale(F, phi_poly(map, v), coef));
      sf.terms = form.terms;
      out.gates[i].push_back(std::move(sf));
    }
  return out;
}

std::uint64_t eval_shifted_depth3(const ShiftedDepth3& c,
                                  const std::vector<std::uint64_t>& x,
                                  const std::vector<std::uint64_t>& t) {
  if (static_cast<int>(x.size()) != c.n || static_cast<int>(t.size()) != c.m)
    throw UsageError("point length mismatch");
  PrimeField F(c.p);
  std::uint64_t value = 0;
  for (int i = 0; i < c.k; ++i) {
    std::uint64_t prod = 1 % c.p;
    for (const auto& form : c.gates[static_cast<std::size_t>(i)]) {
      std::uint64_t v = mp_eval(F, form.b0, t);
      for (auto [var, coef] : form.terms)
        v = F.add(v, F.mul(coef, x[static_cast<std::size_t>(var)]));
      prod = F.mul(prod, v);
    }
    value = F.add(value, F.mul(c.top[static_cast<std::size_t>(i)], prod));
  }
  return value;
}

FactorStats factor_stats(const PolyMatrix& f) {
  FactorStats st;
  std::set<Monomial, MonomialGradedLess> mons;
  for (const auto& e : f.a) {
    st.degree = std::max(st.degree, e.total_degree());
    st.max_support = std::max(st.max_support, e.max_support());
    for (auto& [m, c] : e.terms) mons.insert(m);
  }
  st.sparsity = static_cast<int>(mons.size());
  return st;
}

FactorStats roabp_stats(const Roabp& r) {
  FactorStats st = factor_stats(r.left);
  auto fold = [&st](const FactorStats& o) {
    st.degree = std::max(st.degree, o.degree);
    st.sparsity = std::max(st.sparsity, o.sparsity);
    st.max_support = std::max(st.max_support, o.max_support);
  };
  for (const auto& f : r.inner) fold(factor_stats(f));
  fold(factor_stats(r.right));
  return st;
}

namespace {

void check_factor(const Roabp& r, const PolyMatrix& f, int rows, int cols,
                  const std::vector<int>& block, int idx) {
  std::string where = "factor " + std::to_string(idx);
  if (f.rows != rows || f.cols != cols)
    throw UsageError(where + ": shape mismatch");
  for (const auto& e : f.a) {
    for (auto& [m, c] : e.terms) {
      if (c == 0 || c >= r.p)
        throw UsageError(where + ": coefficient not a nonzero residue");
      for (auto [v, deg] : m.e)
        if (!std::binary_search(block.begin(), block.end(), v))
          throw UsageError(where + ": variable " + std::to_string(v + 1) +
                           " outside its block");
    }
  }
  FactorStats st = factor_stats(f);
  if (st.degree > r.delta || st.sparsity > r.s || st.max_support > r.mu)
    throw UsageError(where + ": declared bounds exceeded");
}

}  // namespace

void validate_roabp(const Roabp& r) {
  if (r.n < 0 || r.w < 1 || r.d < 0) throw UsageError("roabp shape invalid");
  if (static_cast<int>(r.blocks.size()) != r.d + 2)
    throw UsageError("roabp needs d+2 blocks");
  if (static_cast<int>(r.inner.size()) != r.d)
    throw UsageError("roabp needs d inner factors");
  PrimeField F(r.p);
  std::vector<char> seen(static_cast<std::size_t>(r.n), 0);
  for (const auto& b : r.blocks) {
    int prev = -1;
    for (int v : b) {
      if (v < 0 || v >= r.n) throw UsageError("block variable out of range");
      if (v <= prev) throw UsageError("block not sorted");
      prev = v;
      if (seen[static_cast<std::size_t>(v)])
        throw UsageError("blocks overlap at variable " + std::to_string(v + 1));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < r.n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw UsageError("variable " + std::to_string(v + 1) +
                       " missing from all blocks");
  check_factor(r, r.left, 1, r.w, r.blocks[0], 0);
  for (int i = 0; i < r.d; ++i)
    check_factor(r, r.inner[static_cast<std::size_t>(i)], r.w, r.w,
                 r.blocks[static_cast<std::size_t>(i) + 1], i + 1);
  check_factor(r, r.right, r.w, 1, r.blocks[static_cast<std::size_t>(r.d) + 1],
               r.d + 1);
}

std::uint64_t eval_roabp(const Roabp& r, const std::vector<std::uint64_t>& point) {
  if (static_cast<int>(point.size()) != r.n)
    throw UsageError("point length mismatch");
  PrimeField F(r.p);
  std::vector<std::uint64_t> state(static_cast<std::size_t>(r.w));
  for (int j = 0; j < r.w; ++j)
    state[static_cast<std::size_t>(j)] = mp_eval(F, r.left.at(0, j), point);
  for (const auto& fac : r.inner) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r.w), 0);
    for (int j = 0; j < r.w; ++j) {
      std::uint64_t acc = 0;
      for (int i = 0; i < r.w; ++i)
        acc = F.add(acc, F.mul(state[static_cast<std::size_t>(i)],
                               mp_eval(F, fac.at(i, j), point)));
      next[static_cast<std::size_t>(j)] = acc;
    }
    state = std::move(next);
  }
  std::uint64_t out = 0;
  for (int i = 0; i < r.w; ++i)
    out = F.add(out, F.mul(state[static_cast<std::size_t>(i)],
                           mp_eval(F, r.right.at(i, 0), point)));
  return out;
}

namespace {

// Substitute x_v -> x_v + phi(t_v) in one factor entry.
MPoly<SparsePoly> shift_entry(const PrimeField& F, const SparsePoly& e,
                              const MonomialMap& map) {
  MPoly<SparsePoly> out;
  for (auto& [mon, coef] : e.terms) {
    MPoly<SparsePoly> acc;
    acc.terms.emplace(Monomial::one(), SparsePoly::constant(coef));
    for (auto [v, deg] : mon.e) {
      auto binom = binomial_row(F, deg);
      SparsePoly phi = phi_poly(map, v);
      MPoly<SparsePoly> factor;  // (x_v + phi)^deg
      SparsePoly phi_pow = SparsePoly::constant(1 % F.modulus());
      for (int j = deg; j >= 0; --j) {
        // x_v^j coefficient: C(deg, j) * phi^(deg-j); build phi powers upward.
        SparsePoly c = mp_scale(F, phi_pow, binom[static_cast<std::size_t>(j)]);
        Monomial xm = j == 0 ? Monomial::one() : Monomial::var(v, j);
        mp_add_term(F, factor, xm, c);
        if (j > 0) phi_pow = mp_mul(F, phi_pow, phi);
      }
      acc = mp_mul(F, acc, factor);
    }
    for (auto& [m, c] : acc.terms) mp_add_term(F, out, m, c);
  }
  return out;
}

MatrixOf<SparsePoly> shift_factor(const PrimeField& F, const PolyMatrix& f,
                                  const MonomialMap& map) {
  MatrixOf<SparsePoly> out(f.rows, f.cols);
  for (std::size_t i = 0; i < f.a.size(); ++i)
    out.a[i] = shift_entry(F, f.a[i], map);
  return out;
}

}  // namespace

ShiftedRoabp shift_roabp(const Roabp& r, const MonomialMap& map) {
  validate_roabp(r);
  check_map_covers(map, r.n);
  PrimeField F(r.p);
  ShiftedRoabp out;
  out.p = r.p;
  out.n = r.n;
  out.w = r.w;
  out.d = r.d;
  out.m = map.m;
  out.blocks = r.blocks;
  out.left = shift_factor(F, r.left, map);
  out.inner.reserve(r.inner.size());
  for (const auto& f : r.inner) out.inner.push_back(shift_factor(F, f, map));
  out.right = shift_factor(F, r.right, map);
  return out;
}

namespace {

std::uint64_t eval_shifted_entry(const PrimeField& F,
                                 const MPoly<SparsePoly>& e,
                                 const std::vector<std::uint64_t>& x,
                                 const std::vector<std::uint64_t>& t) {
  std::uint64_t acc = 0;
  for (auto& [mon, coef] : e.terms) {
    std::uint64_t v = mp_eval(F, coef, t);
    for (auto [var, deg] : mon.e)
      v = F.mul(v, F.pow(x[static_cast<std::size_t>(var)],
                         static_cast<std::uint64_t>(deg)));
    acc = F.add(acc, v);
  }
  return acc;
}

}  // namespace

std::uint64_t eval_shifted_roabp(const ShiftedRoabp& r,
                                 const std::vector<std::uint64_t>& x,
                                 const std::vector<std::uint64_t>& t) {
  if (static_cast<int>(x.size()) != r.n || static_cast<int>(t.size()) != r.m)
    throw UsageError("point length mismatch");
  PrimeField F(r.p);
  std::vector<std::uint64_t> state(static_cast<std::size_t>(r.w));
  for (int j = 0; j < r.w; ++j)
    state[static_cast<std::size_t>(j)] = eval_shifted_entry(F, r.left.at(0, j), x, t);
  for (const auto& fac : r.inner) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r.w), 0);
    for (int j = 0; j < r.w; ++j) {
      std::uint64_t acc = 0;
      for (int i = 0; i < r.w; ++i)
        acc = F.add(acc, F.mul(state[static_cast<std::size_t>(i)],
                               eval_shifted_entry(F, fac.at(i, j), x, t)));
      next[static_cast<std::size_t>(j)] = acc;
    }
    state = std::move(next);
  }
  std::uint64_t out = 0;
  for (int i = 0; i < r.w; ++i)
    out = F.add(out, F.mul(state[static_cast<std::size_t>(i)],
                           eval_shifted_entry(F, r.right.at(i, 0), x, t)));
  return out;
}

Depth3Circuit random_depth3(std::uint64_t p, int n, int k, int delta,
                            std::uint64_t seed) {
  PrimeField F(p);
  if (n < 1 || k < 1) throw UsageError("random depth3 needs n, k >= 1");
  if (delta < 1 || delta > n)
    throw UsageError("random depth3 needs 1 <= delta <= n");
  SplitMix64 rng(seed);
  auto nonzero = [&]() { return 1 + rng.below(p - 1); };

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Level 1: random partition from a shuffled cut.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle_ints(perm, rng);
    std::vector<std::vector<int>> colors;
    for (std::size_t at = 0; at < perm.size();) {
      std::size_t len = std::min<std::size_t>(1 + rng.below(3), perm.size() - at);
      colors.emplace_back(perm.begin() + static_cast<long>(at),
                          perm.begin() + static_cast<long>(at + len));
      at += len;
    }
    std::vector<Partition> parts{make_partition(n, std::move(colors))};

    // Deeper levels: group current neighborhood classes, then split each
    // group into at most delta colors so no join class ever sees more.
    for (int level = 2; level <= k; ++level) {
      auto classes =
          neighborhoods(make_seq(parts), static_cast<int>(parts.size()));
      std::vector<int> order(classes.size());
      std::iota(order.begin(), order.end(), 0);
      shuffle_ints(order, rng);
      std::vector<std::vector<int>> next_colors;
      for (std::size_t at = 0; at < order.size();) {
        std::size_t take =
            std::min<std::size_t>(1 + rng.below(2), order.size() - at);
        std::vector<int> group;
        for (std::size_t g = 0; g < take; ++g)
          for (int v : classes[static_cast<std::size_t>(order[at + g])])
            group.push_back(v);
        at += take;
        shuffle_ints(group, rng);
        std::size_t r = 1 + rng.below(std::min<std::uint64_t>(
                                static_cast<std::uint64_t>(delta), group.size()));
        // r nonempty chunks of the shuffled group
        std::vector<std::size_t> cuts{0, group.size()};
        std::vector<std::size_t> inner_positions;
        for (std::size_t pos = 1; pos < group.size(); ++pos)
          inner_positions.push_back(pos);
        for (std::size_t j = inner_positions.size(); j > 1; --j)
          std::swap(inner_positions[j - 1], inner_positions[rng.below(j)]);
        for (std::size_t j = 0; j + 1 < r; ++j)
          cuts.push_back(inner_positions[j]);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j)
          next_colors.emplace_back(group.begin() + static_cast<long>(cuts[j]),
                                   group.begin() + static_cast<long>(cuts[j + 1]));
      }
      parts.push_back(make_partition(n, std::move(next_colors)));
    }

    Depth3Circuit c;
    c.p = p;
    c.n = n;
    c.k = k;
    for (int i = 0; i < k; ++i) {
      c.top.push_back(nonzero());
      std::vector<LinearForm> gate;
      for (const auto& color : parts[static_cast<std::size_t>(i)].colors) {
        LinearForm form;
        form.b0 = rng.below(p);
        for (int v : color) form.terms.emplace_back(v, nonzero());
        gate.push_back(std::move(form));
      }
      c.gates.push_back(std::move(gate));
    }
    validate_depth3(c);
    if (distance(make_seq(induced_partitions(c))) <= delta) return c;
  }
  throw Error("random depth3 generation failed to meet the distance bound");
}

Roabp random_roabp(std::uint64_t p, int n, int d, int w, int delta, int s,
                   int mu, bool invertible, std::uint64_t seed) {
  PrimeField F(p);
  if (n < 1 || d < 0 || w < 1) throw UsageError("random roabp shape invalid");
  if (delta < 1 || s < 1 || mu < 0) throw UsageError("random roabp bounds invalid");
  if (invertible && w > 4)
    throw UsageError("invertibility sampling limited to w <= 4");
  SplitMix64 rng(seed);

  Roabp r;
  r.p = p;
  r.n = n;
  r.w = w;
  r.d = d;
  r.delta = delta;
  r.s = s;
  r.mu = mu;

  // Contiguous blocks from d+1 sorted random cut points.
  std::vector<int> cuts{0, n};
  for (int i = 0; i < d + 1; ++i)
    cuts.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1)));
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    std::vector<int> block;
    for (int v = cuts[i]; v < cuts[i + 1]; ++v) block.push_back(v);
    r.blocks.push_back(std::move(block));
  }

  auto random_factor = [&](int rows, int cols, const std::vector<int>& block) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      // Monomial pool shared by the factor's entries keeps sparsity <= s.
      std::set<Monomial, MonomialGradedLess> pool;
      std::size_t want = 1 + rng.below(static_cast<std::uint64_t>(s));
      for (std::size_t j = 0; j < want; ++j) {
        int max_sup = std::min<int>({mu, static_cast<int>(block.size()), delta});
        int sup = max_sup == 0
                      ? 0
                      : static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(max_sup) + 1));
        std::vector<int> vars = block;
        shuffle_ints(vars, rng);
        vars.resize(static_cast<std::size_t>(sup));
        std::sort(vars.begin(), vars.end());
        std::vector<std::pair<int, int>> e;
        int budget = delta - sup;
        for (int v : vars) {
          int extra = budget == 0
                          ? 0
                          : static_cast<int>(rng.below(
                                static_cast<std::uint64_t>(budget) + 1));
          budget -= extra;
          e.emplace_back(v, 1 + extra);
        }
        pool.insert(Monomial{e});
      }
      std::vector<Monomial> mons(pool.begin(), pool.end());
      PolyMatrix f(rows, cols);
      bool any = false;
      for (auto& entry : f.a) {
        std::size_t terms = rng.below(mons.size() + 1);
        for (std::size_t j = 0; j < terms; ++j)
          mp_add_term(F, entry, mons[rng.below(mons.size())], rng.below(p));
        any |= !entry.is_zero();
      }
      if (!any) continue;
      if (invertible && rows == cols && det_symbolic(F, f).is_zero()) continue;
      return f;
    }
    throw Error("random roabp factor sampling failed");
  };

  r.left = random_factor(1, w, r.blocks[0]);
  for (int i = 0; i < d; ++i)
    r.inner.push_back(random_factor(w, w, r.blocks[static_cast<std::size_t>(i) + 1]));
  r.right = random_factor(w, 1, r.blocks[static_cast<std::size_t>(d) + 1]);
  validate_roabp(r);
  return r;
}

}  // namespace pit
