#ifndef SIGRB_GM_ENGINE_HPP
#define SIGRB_GM_ENGINE_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigrb {

/// A critical pair of basis ordinals i < j.
struct ClassicPair {
  std::size_t id = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  bool alive = true;
};

inline bool product_criterion(const Polynomial& f, const Polynomial& g) {
  return coprime(f.lead_monomial(), g.lead_monomial());
}

enum class GmDecision { reduced, zero, vanished, chain_b, chain_m, chain_f, product };

inline std::string_view to_string(GmDecision d) {
  switch (d) {
    case GmDecision::reduced: return "reduced";
    case GmDecision::zero: return "zero";
    case GmDecision::vanished: return "zero-spoly";
    case GmDecision::chain_b: return "B";
    case GmDecision::chain_m: return "M";
    case GmDecision::chain_f: return "F";
    case GmDecision::product: return "PC";
  }
  return "?";
}

/// Stage: 0 = reduced, 1 = M/F (new pairs), 2 = PC, 3 = B (old pairs).
struct GmEvent {
  std::size_t pair = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  GmDecision decision = GmDecision::reduced;
  int stage = 0;
  std::optional<std::size_t> witness;  // the middle element of a chain
  std::optional<std::size_t> inserted;
};

inline std::string format_event(const GmEvent& e, std::span<const std::string> names) {
  return "pair=" + std::to_string(e.pair) + " sig=- lcm=" + to_string(e.lcm, names) +
         " decision=" + std::string(to_string(e.decision)) + " stage=" + std::to_string(e.stage);
}

/// One chain-criterion removal: S(i, j) is expressible through S(i, k) and
/// S(k, j).
struct ChainWitness {
  std::size_t i, j, k;
};

struct GmStats {
  std::size_t zero_reductions = 0;
  std::size_t zero_spolys = 0;  // S-polynomial was 0 before any reduction step
  std::size_t nonzero_reductions = 0;
  std::size_t pairs_created = 0;
  std::size_t removed_b = 0;
  std::size_t removed_m = 0;
  std::size_t removed_f = 0;
  std::size_t removed_pc = 0;
};

/// Basis bookkeeping for the Gebauer-Moeller installation. Members are never
/// erased; a member whose lead is divisible by a later lead is marked
/// redundant and takes no part in new pairs or reductions.
struct GmState {
  std::vector<Polynomial> basis;
  std::vector<bool> redundant;
  std::vector<ClassicPair> pairs;  // the live pair set B
  std::vector<GmEvent> events;
  std::vector<ChainWitness> witnesses;
  GmStats stats;
  std::size_t next_pair_id = 0;

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!redundant[k]) out.push_back(basis[k]);
    return out;
  }
};

/// UPDATE(G, B, h): the Gebauer-Moeller pair update with h appended to the
/// basis. Removals are logged with their chain witness.
inline void gm_update(GmState& st, Polynomial h) {
  const std::size_t hk = st.basis.size();
  const Monomial lh = h.lead_monomial();
  st.basis.push_back(std::move(h));
  st.redundant.push_back(false);

  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    std::size_t id;
  };
  std::vector<Candidate> cand;
  for (std::size_t g = 0; g < hk; ++g) {
    if (st.redundant[g]) continue;
    const Monomial& lg = st.basis[g].lead_monomial();
    cand.push_back(Candidate{g, lcm(lg, lh), coprime(lg, lh), st.next_pair_id++});
    ++st.stats.pairs_created;
  }

  auto log = [&](std::size_t id, std::size_t i, std::size_t j, const Monomial& m, GmDecision d, int stage,
                 std::optional<std::size_t> witness) {
    st.events.push_back(GmEvent{id, i, j, m, d, stage, witness, std::nullopt});
    if (witness) st.witnesses.push_back(ChainWitness{i, j, *witness});
  };

  // Keep (h, g1) if coprime, or if no other candidate still in C or already
  // kept in D has an lcm dividing lcm(h, g1).
  std::vector<Candidate> kept;
  for (std::size_t c = 0; c < cand.size(); ++c) {
    const Candidate& p = cand[c];
    std::optional<std::size_t> by;
    if (!p.coprime) {
      for (std::size_t o = c + 1; o < cand.size() && !by; ++o)
        if (divides(cand[o].lcm, p.lcm)) by = cand[o].g;
      for (std::size_t o = 0; o < kept.size() && !by; ++o)
        if (divides(kept[o].lcm, p.lcm)) by = kept[o].g;
    }
    if (!by) {
      kept.push_back(p);
      continue;
    }
    const Monomial other = lcm(st.basis[*by].lead_monomial(), lh);
    if (other == p.lcm) {
      ++st.stats.removed_f;
      log(p.id, p.g, hk, p.lcm, GmDecision::chain_f, 1, *by);
    } else {
      ++st.stats.removed_m;
      log(p.id, p.g, hk, p.lcm, GmDecision::chain_m, 1, *by);
    }
  }

  // Old pairs (g1, g2) with lt(h) | lcm and both lcm(g_i, h) different from it.
  std::vector<ClassicPair> survivors;
  for (ClassicPair& p : st.pairs) {
    const bool drop = divides(lh, p.lcm) && lcm(st.basis[p.i].lead_monomial(), lh) != p.lcm &&
                      lcm(st.basis[p.j].lead_monomial(), lh) != p.lcm;
    if (drop) {
      ++st.stats.removed_b;
      log(p.id, p.i, p.j, p.lcm, GmDecision::chain_b, 3, hk);
    } else {
      survivors.push_back(std::move(p));
    }
  }
  st.pairs = std::move(survivors);

  // The product criterion goes last so coprime pairs still shadow others above.
  for (const Candidate& p : kept) {
    if (p.coprime) {
      ++st.stats.removed_pc;
      log(p.id, p.g, hk, p.lcm, GmDecision::product, 2, std::nullopt);
      continue;
    }
    st.pairs.push_back(ClassicPair{p.id, p.g, hk, p.lcm, true});
  }

  for (std::size_t g = 0; g < hk; ++g)
    if (!st.redundant[g] && divides(lh, st.basis[g].lead_monomial())) st.redundant[g] = true;
}

struct GmResult {
  std::vector<Polynomial> basis;  // non-redundant members, insertion order
  std::vector<Polynomial> all_members;
  GmStats stats;
  std::vector<GmEvent> events;
  std::vector<ChainWitness> witnesses;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy (lcm degree, then grevlex lcm, then creation order).
/// Inputs enter through UPDATE one at a time, made monic but not reduced.
inline GmResult buchberger_run(const PrimeField& field, std::span<const Polynomial> inputs) {
  if (inputs.empty()) throw std::invalid_argument("empty input");
  GmState st;
  for (const Polynomial& f : inputs) {
    if (f.is_zero()) throw std::invalid_argument("zero input generator");
    gm_update(st, make_monic(field, f));
  }
  while (!st.pairs.empty()) {
    auto best = st.pairs.begin();
    for (auto it = std::next(best); it != st.pairs.end(); ++it) {
      if (it->lcm.degree() != best->lcm.degree()) {
        if (it->lcm.degree() < best->lcm.degree()) best = it;
        continue;
      }
      const auto c = grevlex_compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && it->id < best->id)) best = it;
    }
    const ClassicPair p = *best;
    st.pairs.erase(best);

    const std::vector<Polynomial> reducers = st.active();
    const Polynomial s = spoly(field, st.basis[p.i], st.basis[p.j]);
    GmEvent e{p.id, p.i, p.j, p.lcm, GmDecision::zero, 0, std::nullopt, std::nullopt};
    if (s.is_zero()) {
      ++st.stats.zero_spolys;
      e.decision = GmDecision::vanished;
      st.events.push_back(std::move(e));
      continue;
    }
    const Polynomial h = normal_form(field, s, reducers);
    if (h.is_zero()) {
      ++st.stats.zero_reductions;
      st.events.push_back(std::move(e));
      continue;
    }
    ++st.stats.nonzero_reductions;
    e.decision = GmDecision::reduced;
    e.inserted = st.basis.size();
    st.events.push_back(std::move(e));
    gm_update(st, make_monic(field, h));
  }
  GmResult r;
  r.basis = st.active();
  r.all_members = st.basis;
  r.stats = st.stats;
  r.events = std::move(st.events);
  r.witnesses = std::move(st.witnesses);
  return r;
}

/// Checks S(f, g) = u S(f, h) + v S(h, g) with u = lcm(f,g)/lcm(f,h) and
/// v = lcm(f,g)/lcm(h,g), which needs lt(h) | lcm(lt f, lt g). All three
/// S-polynomials are taken with monic normalization.
inline bool chain_identity_holds(const PrimeField& field, const Polynomial& f, const Polynomial& g,
                                 const Polynomial& h) {
  const Monomial lfg = lcm(f.lead_monomial(), g.lead_monomial());
  if (!divides(h.lead_monomial(), lfg)) return false;
  const Monomial u = quotient(lfg, lcm(f.lead_monomial(), h.lead_monomial()));
  const Monomial v = quotient(lfg, lcm(h.lead_monomial(), g.lead_monomial()));
  const Polynomial lhs = spoly(field, f, g);
  const Polynomial rhs = add(field, mul_term(field, spoly(field, f, h), Term{field.one(), u}),
                             mul_term(field, spoly(field, h, g), Term{field.one(), v}));
  return lhs == rhs;
}

}  // namespace sigrb

#endif
