#ifndef SIGRB_GENERATORS_HPP
#define SIGRB_GENERATORS_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>
#include <sigrb/problem.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigrb {

namespace detail {

inline std::vector<std::string> indexed_names(const std::string& stem, std::size_t first, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(first + i));
  return names;
}

inline Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
  Monomial m(nvars);
  m.set(i, e);
  return m;
}

}  // namespace detail

/// Multiplies every term up to the generator's degree with the last
/// variable, which must not occur in f.
inline Polynomial homogenize(const Polynomial& f, std::size_t hvar) {
  std::vector<Term> terms;
  const std::uint32_t d = [&] {
    std::uint32_t m = 0;
    for (const Term& t : f.terms()) m = std::max(m, t.mono.degree());
    return m;
  }();
  for (const Term& t : f.terms()) {
    if (t.mono[hvar] != 0) throw std::invalid_argument("homogenizing variable already in use");
    Monomial m = t.mono;
    m.set(hvar, d - t.mono.degree());
    terms.push_back(Term{t.coeff, m});
  }
  // Distinct terms stay distinct, so only the order needs restoring.
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  return Polynomial::from_sorted(std::move(terms));
}

/// Appends the variable `h` (smallest in the order) and homogenizes every
/// generator with it.
inline ProblemSpec homogenized(const ProblemSpec& spec) {
  ProblemSpec out;
  out.name = spec.name + "-h";
  out.characteristic = spec.characteristic;
  out.variables = spec.variables;
  out.variables.push_back("h");
  const std::size_t n = out.variables.size();
  for (const Polynomial& f : spec.generators) {
    std::vector<Term> lifted;
    for (const Term& t : f.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, t.mono[i]);
      lifted.push_back(Term{t.coeff, m});
    }
    out.generators.push_back(homogenize(Polynomial::from_terms(out.field(), std::move(lifted)), n - 1));
  }
  return out;
}

/// `count` homogeneous binomials x^a - x^b of degree d in n variables
/// x1 > ... > xn. Each exponent vector places d units on variables drawn
/// uniformly by `seed`; pairs with a == b and repeated generators are redrawn.
inline ProblemSpec gen_binomial(std::size_t n, unsigned d, std::size_t count, std::uint64_t seed,
                                std::uint32_t characteristic = PrimeField::kDefaultCharacteristic) {
  if (n == 0 || n > Monomial::kMaxVariables) throw std::invalid_argument("binomial: bad variable count");
  if (d == 0) throw std::invalid_argument("binomial: degree must be positive");
  ProblemSpec spec;
  spec.name = "binomial-" + std::to_string(n) + "-" + std::to_string(d) + "-s" + std::to_string(seed);
  spec.characteristic = characteristic;
  spec.variables = detail::indexed_names("x", 1, n);
  const PrimeField field(characteristic);
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    Monomial m(n);
    for (unsigned k = 0; k < d; ++k) {
      const std::size_t i = static_cast<std::size_t>(rng() % n);
      m.set(i, m[i] + 1u);
    }
    return m;
  };
  std::size_t attempts = 0;
  while (spec.generators.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw std::invalid_argument("binomial: too few distinct monomials");
    const Monomial a = draw(), b = draw();
    if (a == b) continue;
    Polynomial f = Polynomial::from_terms(field, {Term{field.one(), a}, Term{field.neg(field.one()), b}});
    f = make_monic(field, f);
    if (std::find(spec.generators.begin(), spec.generators.end(), f) != spec.generators.end()) continue;
    spec.generators.push_back(std::move(f));
  }
  return spec;
}

/// cyclic-n in x1..xn: the elementary cyclic sums of lengths 1..n-1 and
/// x1*...*xn - 1.
inline ProblemSpec gen_cyclic(std::size_t n, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic) {
  if (n < 2 || n > Monomial::kMaxVariables) throw std::invalid_argument("cyclic: bad size");
  ProblemSpec spec;
  spec.name = "cyclic-" + std::to_string(n);
  spec.characteristic = characteristic;
  spec.variables = detail::indexed_names("x", 1, n);
  const PrimeField field(characteristic);
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n);
      for (std::size_t j = 0; j < len; ++j) m.set((i + j) % n, 1);
      terms.push_back(Term{field.one(), m});
    }
    spec.generators.push_back(Polynomial::from_terms(field, std::move(terms)));
  }
  Monomial all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i, 1);
  spec.generators.push_back(
      Polynomial::from_terms(field, {Term{field.one(), all}, Term{field.neg(field.one()), Monomial(n)}}));
  return spec;
}

/// katsura-n in u0..un: the linear equation u0 + 2(u1 + ... + un) - 1
/// first, then for m = 0..n-1 the quadrics sum_{l=-n..n} u_|l| u_|m-l| - u_m
/// (u_k = 0 for k > n).
inline ProblemSpec gen_katsura(std::size_t n, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic) {
  if (n < 1 || n + 1 > Monomial::kMaxVariables) throw std::invalid_argument("katsura: bad size");
  ProblemSpec spec;
  spec.name = "katsura-" + std::to_string(n);
  spec.characteristic = characteristic;
  spec.variables = detail::indexed_names("u", 0, n + 1);
  const std::size_t nv = n + 1;
  const PrimeField field(characteristic);

  std::vector<Term> lin{Term{field.one(), detail::variable(nv, 0)}, Term{field.neg(field.one()), Monomial(nv)}};
  for (std::size_t i = 1; i <= n; ++i) lin.push_back(Term{field.from_integer(2), detail::variable(nv, i)});
  spec.generators.push_back(Polynomial::from_terms(field, std::move(lin)));

  const auto N = static_cast<long>(n);
  for (long m = 0; m < N; ++m) {
    std::vector<Term> terms{Term{field.neg(field.one()), detail::variable(nv, static_cast<std::size_t>(m))}};
    for (long l = -N; l <= N; ++l) {
      const long a = std::labs(l), b = std::labs(m - l);
      if (b > N) continue;
      terms.push_back(Term{field.one(), detail::variable(nv, static_cast<std::size_t>(a)) *
                                            detail::variable(nv, static_cast<std::size_t>(b))});
    }
    spec.generators.push_back(Polynomial::from_terms(field, std::move(terms)));
  }
  return spec;
}

/// `count` binomial systems with (n, d) cycling through {4,5,6} x {2,3},
/// n generators each, seeds first_seed, first_seed + 1, ...
inline std::vector<ProblemSpec> binomial_family(std::size_t count, std::uint64_t first_seed = 0) {
  static constexpr std::pair<std::size_t, unsigned> shapes[] = {{4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}, {6, 3}};
  std::vector<ProblemSpec> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto [n, d] = shapes[k % std::size(shapes)];
    out.push_back(gen_binomial(n, d, n, first_seed + k));
  }
  return out;
}

}  // namespace sigrb

#endif
