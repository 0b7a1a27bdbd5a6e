#ifndef SIGRB_POLYNOMIAL_HPP
#define SIGRB_POLYNOMIAL_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigrb {

struct Term {
  Scalar coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial as a list of terms with nonzero coefficients, strictly
/// decreasing in grevlex. The empty list is the zero polynomial.
class Polynomial {
public:
  Polynomial() = default;

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const PrimeField& field, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const Term& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
      if (out.back().coeff.is_zero()) out.pop_back();
    }
    return from_sorted(std::move(out));
  }

  /// Trusts the caller that `terms` is already canonical.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    assert(p.is_canonical());
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  const Term& lead_term() const {
    if (terms_.empty()) throw std::domain_error("lead term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead_term().mono; }
  Scalar lead_coeff() const { return lead_term().coeff; }

  /// Total degree (degree of the lead monomial under grevlex); 0 for zero.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == degree(); });
  }

  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff.is_zero()) return false;
      if (i > 0 && grevlex_compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
    }
    return true;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Term> terms_;
};

namespace detail {

// Appends the canonical merge of `f` and c*m*g to `out`.
inline void merge_sub_multiple(const PrimeField& field, std::span<const Term> f, Scalar c,
                               const Monomial* m, std::span<const Term> g, std::vector<Term>& out) {
  const Scalar neg_c = field.neg(c);
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = m ? g[j].mono * *m : g[j].mono;
    if (i == f.size()) {
      out.push_back(Term{field.mul(neg_c, g[j].coeff), gm});
      ++j;
      continue;
    }
    const auto cmp = grevlex_compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{field.mul(neg_c, g[j].coeff), gm});
      ++j;
    } else {
      Scalar s = field.add(f[i].coeff, field.mul(neg_c, g[j].coeff));
      if (!s.is_zero()) out.push_back(Term{s, f[i].mono});
      ++i;
      ++j;
    }
  }
}

}  // namespace detail

/// f - c*m*g.
inline Polynomial sub_multiple(const PrimeField& field, const Polynomial& f, Scalar c,
                               const Monomial& m, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  detail::merge_sub_multiple(field, f.terms(), c, &m, g.terms(), out);
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial add(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  detail::merge_sub_multiple(field, f.terms(), field.neg(field.one()), nullptr, g.terms(), out);
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial sub(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  detail::merge_sub_multiple(field, f.terms(), field.one(), nullptr, g.terms(), out);
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial scale(const PrimeField& field, const Polynomial& f, Scalar c) {
  if (c.is_zero()) return {};
  std::vector<Term> out(f.terms().begin(), f.terms().end());
  for (Term& t : out) t.coeff = field.mul(t.coeff, c);
  return Polynomial::from_sorted(std::move(out));
}

/// f * t. Multiplying by a monomial preserves the term order.
inline Polynomial mul_term(const PrimeField& field, const Polynomial& f, const Term& t) {
  if (t.coeff.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& s : f.terms()) out.push_back(Term{field.mul(s.coeff, t.coeff), s.mono * t.mono});
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial mul(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const Term& s : f.terms())
    for (const Term& t : g.terms()) out.push_back(Term{field.mul(s.coeff, t.coeff), s.mono * t.mono});
  return Polynomial::from_terms(field, std::move(out));
}

inline Polynomial make_monic(const PrimeField& field, const Polynomial& f) {
  if (f.is_zero() || f.lead_coeff() == field.one()) return f;
  return scale(field, f, field.inv(f.lead_coeff()));
}

/// (lambda/lt f) f - (lambda/lt g) g with lambda the monic lcm of the lead
/// monomials, each half normalized by its lead coefficient.
inline Polynomial spoly(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of the zero polynomial");
  const Monomial lambda = lcm(f.lead_monomial(), g.lead_monomial());
  const Polynomial left = mul_term(field, f, Term{field.inv(f.lead_coeff()), quotient(lambda, f.lead_monomial())});
  return sub_multiple(field, left, field.inv(g.lead_coeff()), quotient(lambda, g.lead_monomial()), g);
}

/// Eliminates the term of f at monomial `t` using g: f - b*g with
/// lt(b*g) equal to that term.
inline Polynomial reduce_step(const PrimeField& field, const Polynomial& f, const Monomial& t,
                              const Polynomial& g) {
  auto it = std::find_if(f.terms().begin(), f.terms().end(), [&](const Term& s) { return s.mono == t; });
  if (it == f.terms().end()) throw std::invalid_argument("reduce_step: monomial is not a term of f");
  const Monomial b = quotient(t, g.lead_monomial());
  return sub_multiple(field, f, field.div(it->coeff, g.lead_coeff()), b, g);
}

/// One reduction step recorded by normal_form: f was replaced by
/// f - coeff * mono * reducers[reducer].
struct QuotientEntry {
  std::size_t reducer;
  Scalar coeff;
  Monomial mono;
};

struct NormalFormOptions {
  bool top_only = false;
  std::vector<QuotientEntry>* quotients = nullptr;
};

/// Among reducers whose lead monomial divides `m`, the one with the
/// grevlex-smallest lead monomial, first on ties.
inline std::optional<std::size_t> select_reducer(std::span<const Polynomial> reducers, const Monomial& m) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < reducers.size(); ++k) {
    if (reducers[k].is_zero() || !divides(reducers[k].lead_monomial(), m)) continue;
    if (!best || grevlex_compare(reducers[k].lead_monomial(), reducers[*best].lead_monomial()) < 0) best = k;
  }
  return best;
}

/// Fully reduces f by `reducers` (or only its lead terms with top_only).
inline Polynomial normal_form(const PrimeField& field, const Polynomial& f, std::span<const Polynomial> reducers,
                              NormalFormOptions opts = {}) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::vector<Term> scratch;
  std::size_t pos = 0;
  while (pos < terms.size()) {
    const auto k = select_reducer(reducers, terms[pos].mono);
    if (!k) {
      if (opts.top_only) break;
      ++pos;
      continue;
    }
    const Polynomial& g = reducers[*k];
    const Monomial b = quotient(terms[pos].mono, g.lead_monomial());
    const Scalar c = field.div(terms[pos].coeff, g.lead_coeff());
    if (opts.quotients) opts.quotients->push_back(QuotientEntry{*k, c, b});
    // Terms before pos are final; the reducer's tail only touches the suffix.
    scratch.clear();
    detail::merge_sub_multiple(field, std::span<const Term>(terms).subspan(pos + 1), c, &b,
                               g.terms().subspan(1), scratch);
    terms.resize(pos);
    terms.insert(terms.end(), scratch.begin(), scratch.end());
  }
  return Polynomial::from_sorted(std::move(terms));
}

inline std::string to_string(const PrimeField& field, const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    std::int64_t c = field.to_signed(t.coeff);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    if (t.mono.is_one()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += to_string(t.mono, names);
    }
  }
  return out;
}

}  // namespace sigrb

#endif
