#pragma once

#include <cstdint>

#include "pit/errors.hpp"

namespace pit {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Arithmetic context for F_p. Elements are plain uint64_t residues in [0, p);
// all operations route through a context so the modulus is explicit at every
// call site. Requires p prime and p < 2^62 (so a + b never wraps).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // Inverse of a != 0 (Fermat). Zero input is a usage error.
  std::uint64_t inv(std::uint64_t a) const;

  // Reduce an arbitrary unsigned value into [0, p).
  std::uint64_t reduce(std::uint64_t v) const { return v % p_; }
  // Reduce a signed value (so "-1" parses to p-1).
  std::uint64_t reduce_signed(long long v) const;

 private:
  std::uint64_t p_;
};

}  // namespace pit
