#pragma once

#include <cstdint>
#include <string>

#include "altdiam/errors.hpp"

namespace altdiam {

/// Arithmetic modulo a prime p with 2 <= p < 2^16. Elements are canonical
/// representatives in {0..p-1} stored as uint32_t; products fit in uint64_t.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
      throw Error(ErrorCode::NotPrime,
                  std::to_string(p) + " is not a prime in [2, 2^16)");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
    return x >= y ? x - y : x + p_ - y;
  }
  std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(x) * y) % p_);
  }
  std::uint32_t inv(std::uint32_t x) const {
    if (x == 0) throw Error(ErrorCode::NotInvertible, "0 has no inverse");
    return pow(x, p_ - 2);
  }
  std::uint32_t pow(std::uint32_t base, std::uint32_t e) const {
    std::uint64_t acc = 1;
    std::uint64_t b = base % p_;
    while (e) {
      if (e & 1) acc = acc * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace altdiam
