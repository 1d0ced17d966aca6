#include "pit/tpoly.hpp"

#include <algorithm>

namespace pit {

TPoly TPoly::monomial(std::uint64_t coef, int deg) {
  TPoly f;
  if (coef != 0) {
    f.c.assign(static_cast<std::size_t>(deg) + 1, 0);
    f.c.back() = coef;
  }
  return f;
}

void tp_trim(TPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

TPoly tp_add(const PrimeField& F, const TPoly& a, const TPoly& b) {
  TPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(x, y);
  }
  tp_trim(r);
  return r;
}

TPoly tp_sub(const PrimeField& F, const TPoly& a, const TPoly& b) {
  TPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.sub(x, y);
  }
  tp_trim(r);
  return r;
}

TPoly tp_neg(const PrimeField& F, const TPoly& a) {
  TPoly r = a;
  for (auto& v : r.c) v = F.neg(v);
  return r;
}

TPoly tp_mul(const PrimeField& F, const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly::zero();
  TPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  tp_trim(r);
  return r;
}

TPoly tp_scale(const PrimeField& F, const TPoly& a, std::uint64_t s) {
  if (s == 0) return TPoly::zero();
  TPoly r = a;
  for (auto& v : r.c) v = F.mul(v, s);
  tp_trim(r);
  return r;
}

std::uint64_t tp_eval(const PrimeField& F, const TPoly& f, std::uint64_t tau) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, tau), f.c[i]);
  return acc;
}

TPoly tp_divexact(const PrimeField& F, const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw UsageError("tp_divexact: division by zero");
  if (a.is_zero()) return TPoly::zero();
  int db = b.degree();
  if (a.degree() < db) throw UsageError("tp_divexact: not divisible (degree)");
  std::vector<std::uint64_t> rem = a.c;
  TPoly quo;
  quo.c.assign(a.c.size() - b.c.size() + 1, 0);
  std::uint64_t lead_inv = F.inv(b.c.back());
  for (int d = a.degree(); d >= db; --d) {
    std::uint64_t top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    std::uint64_t q = F.mul(top, lead_inv);
    quo.c[static_cast<std::size_t>(d - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(d - db + j);
      rem[idx] = F.sub(rem[idx], F.mul(q, b.c[static_cast<std::size_t>(j)]));
    }
  }
  for (auto v : rem)
    if (v != 0) throw UsageError("tp_divexact: not divisible (remainder)");
  tp_trim(quo);
  return quo;
}

}  // namespace pit
