#ifndef SIGRB_SIGNATURE_HPP
#define SIGRB_SIGNATURE_HPP

#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigrb {

/// A coefficient-free module monomial mono * e_index, index in [1, m].
struct Signature {
  Monomial mono;
  std::uint32_t index = 1;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature sig_mul(const Signature& s, const Monomial& a) { return Signature{s.mono * a, s.index}; }

inline bool sig_divides(const Signature& s, const Signature& t) {
  return s.index == t.index && divides(s.mono, t.mono);
}

/// The monomial a with a*s == t.
inline Monomial sig_div(const Signature& t, const Signature& s) {
  if (s.index != t.index) throw std::domain_error("inexact signature division");
  return quotient(t.mono, s.mono);
}

/// Renders as `y*z*e_2`, or `e_2` for a bare unit vector.
inline std::string to_string(const Signature& s, std::span<const std::string> names) {
  const std::string e = "e_" + std::to_string(s.index);
  return s.mono.is_one() ? e : to_string(s.mono, names) + "*" + e;
}

enum class ModuleOrder { pot, pot_rev, d_pot, lt_pot };

inline std::string_view to_string(ModuleOrder o) {
  switch (o) {
    case ModuleOrder::pot: return "pot";
    case ModuleOrder::pot_rev: return "pot-rev";
    case ModuleOrder::d_pot: return "d-pot";
    case ModuleOrder::lt_pot: return "lt-pot";
  }
  return "?";
}

/// Accepts both `d-pot` and `dpot` spellings.
inline std::optional<ModuleOrder> parse_module_order(std::string_view s) {
  if (s == "pot") return ModuleOrder::pot;
  if (s == "pot-rev" || s == "potrev") return ModuleOrder::pot_rev;
  if (s == "d-pot" || s == "dpot") return ModuleOrder::d_pot;
  if (s == "lt-pot" || s == "ltpot") return ModuleOrder::lt_pot;
  return std::nullopt;
}

/// A module monomial order on R^m compatible with grevlex on R. The weighted
/// orders read lead monomials and degrees of the input generators, which are
/// frozen at construction.
class ModuleOrderContext {
public:
  ModuleOrderContext(ModuleOrder kind, std::span<const Polynomial> inputs) : kind_(kind) {
    for (const Polynomial& f : inputs) {
      if (f.is_zero()) throw std::invalid_argument("zero input generator");
      leads_.push_back(f.lead_monomial());
      degrees_.push_back(f.degree());
    }
  }

  ModuleOrder kind() const { return kind_; }
  std::size_t rank() const { return leads_.size(); }
  const Monomial& input_lead(std::uint32_t index) const { return leads_.at(index - 1); }
  std::uint32_t input_degree(std::uint32_t index) const { return degrees_.at(index - 1); }

  std::strong_ordering compare(const Signature& s, const Signature& t) const {
    assert(s.index >= 1 && s.index <= rank() && t.index >= 1 && t.index <= rank());
    switch (kind_) {
      case ModuleOrder::pot:
        return position_over_term(s, t);
      case ModuleOrder::pot_rev:
        if (s.index != t.index) return t.index <=> s.index;
        return grevlex_compare(s.mono, t.mono);
      case ModuleOrder::d_pot: {
        const auto ds = s.mono.degree() + degrees_[s.index - 1];
        const auto dt = t.mono.degree() + degrees_[t.index - 1];
        if (ds != dt) return ds <=> dt;
        return position_over_term(s, t);
      }
      case ModuleOrder::lt_pot: {
        const auto c = grevlex_compare(s.mono * leads_[s.index - 1], t.mono * leads_[t.index - 1]);
        if (c != 0) return c;
        return position_over_term(s, t);
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Signature& s, const Signature& t) const { return compare(s, t) < 0; }

  const Signature& max(const Signature& s, const Signature& t) const { return less(s, t) ? t : s; }

  /// Whether index `later` comes after `earlier` in the index precedence
  /// (higher for pot-like orders, lower for pot-rev).
  bool index_after(std::uint32_t later, std::uint32_t earlier) const {
    return kind_ == ModuleOrder::pot_rev ? later < earlier : later > earlier;
  }

private:
  static std::strong_ordering position_over_term(const Signature& s, const Signature& t) {
    if (s.index != t.index) return s.index <=> t.index;
    return grevlex_compare(s.mono, t.mono);
  }

  ModuleOrder kind_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> degrees_;
};

/// Lead signature of the Koszul syzygy f_i e_j - f_j e_i, i < j.
inline Signature koszul_signature(const ModuleOrderContext& ctx, std::uint32_t i, std::uint32_t j) {
  if (!(i < j)) throw std::invalid_argument("koszul_signature requires i < j");
  const Signature a{ctx.input_lead(i), j};
  const Signature b{ctx.input_lead(j), i};
  return ctx.max(a, b);
}

}  // namespace sigrb

#endif
