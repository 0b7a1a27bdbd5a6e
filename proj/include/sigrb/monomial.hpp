#ifndef SIGRB_MONOMIAL_HPP
#define SIGRB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace sigrb {

using Exponent = std::uint16_t;

/// An exponent vector x^v over a fixed number of variables, with the total
/// degree cached. Storage is inline; variables beyond size() are always zero.
class Monomial {
public:
  static constexpr std::size_t kMaxVariables = 32;

  Monomial() = default;

  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
  }

  static Monomial from_exponents(std::initializer_list<unsigned> exps) {
    Monomial m(exps.size());
    std::size_t i = 0;
    for (unsigned e : exps) m.set(i++, e);
    return m;
  }

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    assert(i < nvars_);
    assert(e <= UINT16_MAX);
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.nvars_ == b.nvars_);
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      assert(std::uint32_t{a.exps_[i]} + b.exps_[i] <= UINT16_MAX);
      r.exps_[i] = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Graded reverse lexicographic order: total degree first, then the monomial
/// whose last differing exponent is smaller is the greater one.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

/// True iff `d` divides `m` componentwise.
inline bool divides(const Monomial& d, const Monomial& m) {
  assert(d.size() == m.size());
  if (d.degree() > m.degree()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::min(a[i], b[i]));
  return r;
}

/// m / d; throws unless d divides m.
inline Monomial quotient(const Monomial& m, const Monomial& d) {
  if (!divides(d, m)) throw std::domain_error("inexact monomial division");
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r.set(i, m[i] - d[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Renders as `x^2*y*z`, or `1` for the constant monomial.
inline std::string to_string(const Monomial& m, std::span<const std::string> names) {
  assert(names.size() >= m.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sigrb

#endif
