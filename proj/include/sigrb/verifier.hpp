#ifndef SIGRB_VERIFIER_HPP
#define SIGRB_VERIFIER_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace sigrb {

/// Buchberger's criterion over all unordered pairs, no criteria applied.
inline bool verify_gb(const PrimeField& field, std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& f : basis)
    if (!f.is_zero()) g.push_back(f);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(field, spoly(field, g[i], g[j]), g).is_zero()) return false;
  return true;
}

/// Minimal, monic, tail-reduced, sorted by decreasing lead monomial. For a
/// Groebner basis this is the unique reduced Groebner basis of its ideal.
inline std::vector<Polynomial> reduce_basis(const PrimeField& field, std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& f : basis)
    if (!f.is_zero()) g.push_back(make_monic(field, f));
  // Smallest leads first, so every dropped element has its divisor kept.
  std::stable_sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& f : g) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return divides(m.lead_monomial(), f.lead_monomial());
    });
    if (!dominated) minimal.push_back(f);
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(minimal[o]);
    // Minimality keeps the lead in place; only the tail changes.
    out.push_back(normal_form(field, minimal[k], others));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return out;
}

inline bool bases_equal(const PrimeField& field, std::span<const Polynomial> a, std::span<const Polynomial> b) {
  return reduce_basis(field, a) == reduce_basis(field, b);
}

/// Every member of `basis` lies in the ideal of the Groebner basis `reference`.
inline bool contained_in(const PrimeField& field, std::span<const Polynomial> basis,
                         std::span<const Polynomial> reference) {
  return std::all_of(basis.begin(), basis.end(),
                     [&](const Polynomial& f) { return normal_form(field, f, reference).is_zero(); });
}

}  // namespace sigrb

#endif
