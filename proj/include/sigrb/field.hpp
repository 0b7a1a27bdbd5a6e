#ifndef SIGRB_FIELD_HPP
#define SIGRB_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigrb {

/// An element of Z/p in canonical form. The modulus is not stored here; it
/// lives in the PrimeField shared by the whole computation.
struct Scalar {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Scalar, Scalar) = default;
  constexpr bool is_zero() const { return value == 0; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic context for the prime field Z/p with p < 2^31.
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint64_t p = kDefaultCharacteristic) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw std::invalid_argument("characteristic " + std::to_string(p) +
                                  " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }

  /// Reduces an arbitrary signed integer into [0, p).
  Scalar from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar{static_cast<std::uint32_t>(r)};
  }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Scalar a) const {
    check(a);
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
  }

  Scalar add(Scalar a, Scalar b) const {
    check(a);
    check(b);
    std::uint32_t s = a.value + b.value;
    if (s >= p_) s -= p_;
    return Scalar{s};
  }

  Scalar neg(Scalar a) const {
    check(a);
    return Scalar{a.value == 0 ? 0 : p_ - a.value};
  }

  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

  Scalar mul(Scalar a, Scalar b) const {
    check(a);
    check(b);
    return Scalar{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }

  // Extended Euclid on (a, p).
  Scalar inv(Scalar a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("division by zero in prime field");
    std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    assert(r0 == 1);
    return from_integer(s0);
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  // A scalar outside [0, p) means it came from a different field.
  void check([[maybe_unused]] Scalar a) const { assert(a.value < p_ && "scalar from another field"); }

  std::uint32_t p_;
};

}  // namespace sigrb

#endif
