#include "pit/monomial.hpp"

#include <algorithm>

#include "pit/errors.hpp"

namespace pit {

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [v, x] : e) d += x;
  return d;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  s.reserve(e.size());
  for (auto& [v, x] : e) s.push_back(v);
  return s;
}

int Monomial::degree_of(int v) const {
  for (auto& [u, x] : e)
    if (u == v) return x;
  return 0;
}

bool Monomial::is_multilinear() const {
  for (auto& [v, x] : e)
    if (x > 1) return false;
  return true;
}

Monomial Monomial::var(int v, int exp) {
  Monomial m;
  if (exp > 0) m.e.emplace_back(v, exp);
  return m;
}

Monomial Monomial::from_support(const std::vector<int>& vars) {
  Monomial m;
  m.e.reserve(vars.size());
  for (int v : vars) m.e.emplace_back(v, 1);
  std::sort(m.e.begin(), m.e.end());
  return m;
}

Monomial Monomial::from_mask(std::uint32_t mask) {
  Monomial m;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) m.e.emplace_back(v, 1);
  return m;
}

std::uint32_t Monomial::to_mask() const {
  std::uint32_t mask = 0;
  for (auto& [v, x] : e) {
    if (v >= 32) throw UsageError("monomial mask: variable index >= 32");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.e.reserve(a.e.size() + b.e.size());
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first)
      r.e.push_back(a.e[i++]);
    else if (a.e[i].first > b.e[j].first)
      r.e.push_back(b.e[j++]);
    else {
      r.e.emplace_back(a.e[i].first, a.e[i].second + b.e[j].second);
      ++i, ++j;
    }
  }
  while (i < a.e.size()) r.e.push_back(a.e[i++]);
  while (j < b.e.size()) r.e.push_back(b.e[j++]);
  return r;
}

int block_support(const Monomial& m,
                  const std::vector<std::vector<int>>& blocks) {
  int count = 0;
  for (auto& blk : blocks) {
    for (int v : blk) {
      if (m.degree_of(v) > 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Walk both sparse exponent lists; at the first variable where they differ,
  // the monomial with the higher exponent is the larger one.
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first == b.e[j].first) {
      if (a.e[i].second != b.e[j].second)
        return a.e[i].second < b.e[j].second;
      ++i, ++j;
    } else if (a.e[i].first < b.e[j].first) {
      // a has positive exponent on an earlier variable; a is larger.
      return false;
    } else {
      return true;
    }
  }
  if (i < a.e.size()) return false;
  if (j < b.e.size()) return true;
  return false;  // equal
}

}  // namespace pit
