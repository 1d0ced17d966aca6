#include "pit/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pit/errors.hpp"

namespace pit {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  b %= q;
  std::uint64_t r = 1 % q;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % q);
    b = static_cast<std::uint64_t>((unsigned __int128)b * b % q);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t PrimeStream::next() {
  std::uint64_t c = primes_.empty() ? 2 : primes_.back() + 1;
  for (;; ++c) {
    bool prime = true;
    for (std::uint64_t p : primes_) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      primes_.push_back(c);
      return c;
    }
  }
}

std::uint64_t lemma_candidate_count(int n, int d, std::uint64_t a) {
  if (n < 1 || d < 1 || a < 1) throw UsageError("candidate count needs n,d,a >= 1");
  long double v = static_cast<long double>(n) * d * a * a *
                  std::log2(static_cast<long double>(d) + 1.0L);
  if (v > 9e18L) throw SizeLimitError("candidate budget overflows");
  auto count = static_cast<std::uint64_t>(std::ceil(v));
  return count < 1 ? 1 : count;
}

std::uint64_t stream_degree_bound(std::uint64_t N) {
  long double v = static_cast<long double>(N) *
                  std::log2(static_cast<long double>(std::max<std::uint64_t>(N, 2)));
  if (v > 9e18L) throw SizeLimitError("degree bound overflows");
  return static_cast<std::uint64_t>(std::ceil(v));
}

MonomialMap stream_map(int n, int d, std::uint64_t q) {
  if (n < 1 || d < 0 || q < 2) throw UsageError("bad stream map parameters");
  MonomialMap map;
  map.n = n;
  map.m = 1;
  map.target.assign(static_cast<std::size_t>(n), 0);
  map.q = {q};
  map.base = {static_cast<std::uint64_t>(d) + 1};
  map.exp.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    map.exp[static_cast<std::size_t>(v)] =
        powmod(map.base[0], static_cast<std::uint64_t>(v), q);
  return map;
}

std::vector<unsigned __int128> map_image(const MonomialMap& map,
                                         const Monomial& mon) {
  std::vector<unsigned __int128> img(static_cast<std::size_t>(map.m), 0);
  for (auto [v, d] : mon.e) {
    if (v < 0 || v >= map.n) throw UsageError("monomial variable outside map domain");
    auto sv = static_cast<std::size_t>(v);
    img[static_cast<std::size_t>(map.target[sv])] +=
        (unsigned __int128)map.exp[sv] * static_cast<unsigned>(d);
  }
  return img;
}

bool separates(const MonomialMap& map, const std::vector<Monomial>& mons) {
  std::vector<std::vector<unsigned __int128>> images;
  images.reserve(mons.size());
  for (const auto& mon : mons) images.push_back(map_image(map, mon));
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

std::vector<Monomial> enumerate_support_bounded(const std::vector<int>& vars,
                                                int support_cap, int d,
                                                std::size_t limit) {
  if (support_cap < 0 || d < 0) throw UsageError("negative enumeration bound");
  std::vector<int> vs = vars;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw UsageError("duplicate variable in enumeration set");

  std::vector<Monomial> out;
  std::vector<std::pair<int, int>> acc;
  std::function<void(std::size_t, int)> go = [&](std::size_t idx, int sup_left) {
    if (out.size() >= limit) throw SizeLimitError("monomial family too large");
    out.push_back(Monomial{acc});
    if (sup_left == 0) return;
    for (std::size_t j = idx; j < vs.size(); ++j)
      for (int e = 1; e <= d; ++e) {
        acc.emplace_back(vs[j], e);
        go(j + 1, sup_left - 1);
        acc.pop_back();
      }
  };
  go(0, support_cap);
  return out;
}

MonomialMap find_separating_map(const std::vector<Monomial>& mons, int n, int d,
                                std::uint64_t* tried) {
  if (n < 1) throw UsageError("map domain needs n >= 1");
  const std::uint64_t budget =
      lemma_candidate_count(n, std::max(d, 1), std::max<std::uint64_t>(mons.size(), 1));
  PrimeStream stream;
  for (std::uint64_t i = 0; i < budget; ++i) {
    MonomialMap map = stream_map(n, d, stream.next());
    if (separates(map, mons)) {
      if (tried) *tried = i + 1;
      return map;
    }
  }
  throw Error("separating map not found within candidate budget");
}

MonomialMap multi_base_map(const BaseSetDecomposition& decomp, int support_cap,
                           int d) {
  if (decomp.sets.empty()) throw UsageError("empty decomposition");
  MonomialMap map;
  map.n = decomp.n;
  map.m = static_cast<int>(decomp.sets.size());
  map.target.assign(static_cast<std::size_t>(decomp.n), -1);
  map.exp.assign(static_cast<std::size_t>(decomp.n), 0);
  map.q.resize(decomp.sets.size());
  map.base.resize(decomp.sets.size());
  for (std::size_t i = 0; i < decomp.sets.size(); ++i) {
    const auto& B = decomp.sets[i];
    auto axis_mons = enumerate_support_bounded(B, support_cap, std::max(d, 1));
    // Search on a compacted axis domain (rank within B), then scatter back.
    std::vector<Monomial> compact;
    compact.reserve(axis_mons.size());
    for (const auto& mon : axis_mons) {
      Monomial c = mon;
      for (auto& [v, e] : c.e) {
        auto it = std::lower_bound(B.begin(), B.end(), v);
        v = static_cast<int>(it - B.begin());
      }
      compact.push_back(std::move(c));
    }
    MonomialMap axis =
        find_separating_map(compact, static_cast<int>(B.size()), d);
    map.q[i] = axis.q[0];
    map.base[i] = axis.base[0];
    for (std::size_t r = 0; r < B.size(); ++r) {
      auto v = static_cast<std::size_t>(B[r]);
      map.target[v] = static_cast<int>(i);
      map.exp[v] = axis.exp[r];
    }
  }
  return map;
}

}  // namespace pit
