#ifndef SIGRB_AUDIT_HPP
#define SIGRB_AUDIT_HPP

#include <sigrb/field.hpp>
#include <sigrb/gm_engine.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>
#include <sigrb/rb_engine.hpp>
#include <sigrb/signature.hpp>

#include <array>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace sigrb {

/// Unordered basis-ordinal pairs whose S-pair was actually s-reduced.
inline std::set<std::pair<std::size_t, std::size_t>> reduced_pairs(std::span<const RbEvent> events) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const RbEvent& e : events) {
    if (e.seed) continue;
    if (e.decision != Decision::reduced && e.decision != Decision::zero && e.decision != Decision::vanished) continue;
    out.emplace(std::min(e.major, e.minor), std::max(e.major, e.minor));
  }
  return out;
}

struct ChainAudit {
  using Triple = std::array<std::size_t, 3>;  // (alpha, beta, gamma), gamma in the middle

  std::size_t triples = 0;  // chain triples whose outer pair was reduced
  std::vector<Triple> violations;
  // Violations where lcm/lt(gamma) * sig(gamma) is not above the signature
  // of S(alpha, beta); the rest have gamma's multiple strictly on top.
  std::vector<Triple> bounded_violations;
};

/// For every triple of final basis members with lt(gamma) | lcm(lt alpha,
/// lt beta), at least one of S(alpha,beta), S(alpha,gamma), S(gamma,beta)
/// must have been left unreduced. Only triples whose outer pair was reduced
/// can fail, so the scan starts from the reduced pairs.
inline ChainAudit audit_chain_triples(const RbResult& r) {
  const auto done = reduced_pairs(r.events);
  auto reduced = [&](std::size_t a, std::size_t b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };
  ChainAudit audit;
  for (const auto& [a, b] : done) {
    const Monomial l = lcm(r.basis[a].lead(), r.basis[b].lead());
    const Signature top = r.ctx.max(sig_mul(r.basis[a].sig, quotient(l, r.basis[a].lead())),
                                    sig_mul(r.basis[b].sig, quotient(l, r.basis[b].lead())));
    for (std::size_t g = 0; g < r.basis.size(); ++g) {
      if (g == a || g == b || !divides(r.basis[g].lead(), l)) continue;
      ++audit.triples;
      if (!reduced(a, g) || !reduced(g, b)) continue;
      audit.violations.push_back({a, b, g});
      if (!r.ctx.less(top, sig_mul(r.basis[g].sig, quotient(l, r.basis[g].lead()))))
        audit.bounded_violations.push_back({a, b, g});
    }
  }
  return audit;
}

/// Witnessed chain removals of a GM run whose decomposition does not hold.
inline std::vector<ChainWitness> audit_gm_witnesses(const PrimeField& field, const GmResult& r) {
  std::vector<ChainWitness> bad;
  for (const ChainWitness& w : r.witnesses)
    if (!chain_identity_holds(field, r.all_members[w.i], r.all_members[w.j], r.all_members[w.k])) bad.push_back(w);
  return bad;
}

/// Regular s-reduces S(alpha, beta) with respect to `reducers` only. Returns
/// nullopt for a singular pair.
inline std::optional<Polynomial> forced_pair_reduction(const PrimeField& field, const ModuleOrderContext& ctx,
                                                       const LabeledPoly& alpha, const LabeledPoly& beta,
                                                       std::span<const LabeledPoly> reducers) {
  const auto p = make_spair(ctx, alpha, beta);
  if (!p) return std::nullopt;
  const LabeledPoly& major = p->major.ordinal == alpha.ordinal ? alpha : beta;
  const LabeledPoly& minor = p->major.ordinal == alpha.ordinal ? beta : alpha;
  const Polynomial f =
      sub_multiple(field, mul_term(field, major.poly, Term{field.one(), p->major.mult}),
                   field.div(major.poly.lead_coeff(), minor.poly.lead_coeff()), p->minor.mult, minor.poly);
  return s_reduce_regular(field, ctx, p->sig, f, reducers);
}

/// The same reduction using just the two generators, relabeled so that
/// ordinals index the two-element reducer list.
inline std::optional<Polynomial> forced_coprime_reduction(const PrimeField& field, const ModuleOrderContext& ctx,
                                                          const LabeledPoly& alpha, const LabeledPoly& beta) {
  const std::array<LabeledPoly, 2> pair{LabeledPoly{alpha.sig, alpha.poly, 0}, LabeledPoly{beta.sig, beta.poly, 1}};
  return forced_pair_reduction(field, ctx, pair[0], pair[1], pair);
}

}  // namespace sigrb

#endif
