#include "pit/expand.hpp"

#include "pit/errors.hpp"

namespace pit {

namespace {

SparsePoly to_poly(const PrimeField&, std::uint64_t c) {
  return SparsePoly::constant(c);
}
const SparsePoly& to_poly(const PrimeField&, const SparsePoly& c) { return c; }

void set_one(const PrimeField& F, MPoly<std::uint64_t>& e) {
  e = MPoly<std::uint64_t>::constant(1 % F.modulus());
}
void set_one(const PrimeField& F, MPoly<SparsePoly>& e) {
  e = MPoly<SparsePoly>::constant(SparsePoly::constant(1 % F.modulus()));
}

template <class C>
void cap_check(const MatrixOf<C>& m) {
  std::size_t total = 0;
  for (const auto& e : m.a) total += e.terms.size();
  if (total > kExpandCap) throw SizeLimitError("expansion exceeds cap");
}

// Scatter one gate/cell polynomial into the table's coordinate `at`.
template <class C>
void scatter(const PrimeField& F, VecTable& table, const MPoly<C>& poly,
             std::size_t at) {
  for (const auto& [mon, c] : poly.terms) {
    auto [it, fresh] = table.rows.try_emplace(
        mon, std::vector<SparsePoly>(static_cast<std::size_t>(table.dim)));
    if (fresh && table.rows.size() > kExpandCap)
      throw SizeLimitError("expansion exceeds cap");
    it->second[at] = to_poly(F, c);
  }
}

template <class C>
VecTable depth3_table(const PrimeField& F, int n, int k, int tvars,
                      const std::vector<std::vector<MPoly<C>>>& gate_polys) {
  VecTable table;
  table.n = n;
  table.dim = k;
  table.tvars = tvars;
  for (int g = 0; g < k; ++g) {
    MPoly<C> acc;
    set_one(F, acc);
    for (const auto& f : gate_polys[static_cast<std::size_t>(g)]) {
      acc = mp_mul(F, acc, f);
      if (acc.terms.size() > kExpandCap)
        throw SizeLimitError("expansion exceeds cap");
    }
    scatter(F, table, acc, static_cast<std::size_t>(g));
  }
  return table;
}

template <class C>
VecTable chain_scalar_table(const PrimeField& F, int n, int tvars,
                            const MatrixOf<C>& left,
                            const std::vector<MatrixOf<C>>& inner,
                            const MatrixOf<C>& right) {
  MatrixOf<C> state = left;
  cap_check(state);
  for (const auto& f : inner) {
    state = mat_mul(F, state, f);
    cap_check(state);
  }
  state = mat_mul(F, state, right);
  cap_check(state);
  VecTable table;
  table.n = n;
  table.dim = 1;
  table.tvars = tvars;
  scatter(F, table, state.at(0, 0), 0);
  return table;
}

template <class C>
VecTable chain_interior_table(const PrimeField& F, int n, int w, int tvars,
                              const std::vector<MatrixOf<C>>& inner) {
  MatrixOf<C> state(w, w);
  for (int i = 0; i < w; ++i) set_one(F, state.at(i, i));
  for (const auto& f : inner) {
    state = mat_mul(F, state, f);
    cap_check(state);
  }
  VecTable table;
  table.n = n;
  table.dim = w * w;
  table.tvars = tvars;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      scatter(F, table, state.at(i, j), static_cast<std::size_t>(i) *
                                            static_cast<std::size_t>(w) +
                                            static_cast<std::size_t>(j));
  return table;
}

}  // namespace

VecTable expand_depth3(const Depth3Circuit& c) {
  validate_depth3(c);
  if (c.n > 20) throw SizeLimitError("depth3 expansion limited to n <= 20");
  PrimeField F(c.p);
  std::vector<std::vector<MPoly<std::uint64_t>>> gate_polys(
      static_cast<std::size_t>(c.k));
  for (int g = 0; g < c.k; ++g)
    for (const auto& form : c.gates[static_cast<std::size_t>(g)]) {
      MPoly<std::uint64_t> f;
      mp_add_term(F, f, Monomial::one(), form.b0);
      for (auto [v, coef] : form.terms) mp_add_term(F, f, Monomial::var(v), coef);
      gate_polys[static_cast<std::size_t>(g)].push_back(std::move(f));
    }
  return depth3_table<std::uint64_t>(F, c.n, c.k, 0, gate_polys);
}

VecTable expand_shifted_depth3(const ShiftedDepth3& c) {
  if (c.n > 20) throw SizeLimitError("depth3 expansion limited to n <= 20");
  PrimeField F(c.p);
  std::vector<std::vector<MPoly<SparsePoly>>> gate_polys(
      static_cast<std::size_t>(c.k));
  for (int g = 0; g < c.k; ++g)
    for (const auto& form : c.gates[static_cast<std::size_t>(g)]) {
      MPoly<SparsePoly> f;
      mp_add_term(F, f, Monomial::one(), form.b0);
      for (auto [v, coef] : form.terms)
        mp_add_term(F, f, Monomial::var(v), SparsePoly::constant(coef));
      gate_polys[static_cast<std::size_t>(g)].push_back(std::move(f));
    }
  return depth3_table<SparsePoly>(F, c.n, c.k, c.m, gate_polys);
}

VecTable expand_roabp(const Roabp& r) {
  validate_roabp(r);
  PrimeField F(r.p);
  return chain_scalar_table(F, r.n, 0, r.left, r.inner, r.right);
}

VecTable expand_shifted_roabp(const ShiftedRoabp& r) {
  PrimeField F(r.p);
  return chain_scalar_table(F, r.n, r.m, r.left, r.inner, r.right);
}

VecTable expand_roabp_interior(const Roabp& r) {
  validate_roabp(r);
  PrimeField F(r.p);
  return chain_interior_table(F, r.n, r.w, 0, r.inner);
}

VecTable expand_shifted_roabp_interior(const ShiftedRoabp& r) {
  PrimeField F(r.p);
  return chain_interior_table(F, r.n, r.w, r.m, r.inner);
}

VecTable scalar_from_gate_table(const PrimeField& F, const VecTable& t,
                                const std::vector<std::uint64_t>& top) {
  if (static_cast<int>(top.size()) != t.dim)
    throw UsageError("top coefficient count mismatch");
  VecTable out;
  out.n = t.n;
  out.dim = 1;
  out.tvars = t.tvars;
  for (const auto& [mon, coords] : t.rows) {
    SparsePoly acc;
    for (std::size_t i = 0; i < coords.size(); ++i)
      acc = mp_add(F, acc, mp_scale(F, coords[i], top[i]));
    if (!acc.is_zero())
      out.rows.emplace(mon, std::vector<SparsePoly>{std::move(acc)});
  }
  return out;
}

std::uint64_t table_eval(const PrimeField& F, const VecTable& t,
                         const std::vector<std::uint64_t>& point) {
  if (t.dim != 1 || t.tvars != 0)
    throw UsageError("table_eval needs a scalar plain table");
  if (static_cast<int>(point.size()) != t.n)
    throw UsageError("point length mismatch");
  std::uint64_t acc = 0;
  for (const auto& [mon, coords] : t.rows) {
    const SparsePoly& c = coords[0];
    std::uint64_t v = c.is_zero() ? 0 : c.terms.begin()->second;
    for (auto [var, deg] : mon.e)
      v = F.mul(v, F.pow(point[static_cast<std::size_t>(var)],
                         static_cast<std::uint64_t>(deg)));
    acc = F.add(acc, v);
  }
  return acc;
}

}  // namespace pit
