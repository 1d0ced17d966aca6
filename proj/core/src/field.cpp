#include "pit/field.hpp"

namespace pit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62))
    throw UsageError("field modulus must be < 2^62");
  if (!is_prime_u64(p))
    throw UsageError("field modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return powmod(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw UsageError("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce_signed(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace pit
