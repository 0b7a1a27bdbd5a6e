#ifndef SIGRB_RB_ENGINE_HPP
#define SIGRB_RB_ENGINE_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>
#include <sigrb/signature.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigrb {

/// A sig-poly pair (sigma(alpha), pi(alpha)) stored in the basis. The
/// polynomial is monic; `ordinal` is the insertion position.
struct LabeledPoly {
  Signature sig;
  Polynomial poly;
  std::size_t ordinal = 0;

  const Monomial& lead() const { return poly.lead_monomial(); }
};

/// mult * basis[ordinal], one half of an S-pair.
struct PairSide {
  Monomial mult;
  std::size_t ordinal = 0;
};

/// A scheduled regular S-pair, or the seed e_i of an input generator.
struct SPair {
  enum class Kind { seed, spair };

  Kind kind = Kind::spair;
  std::size_t id = 0;
  Signature sig;
  Monomial lcm;
  PairSide major;  // the side carrying the pair's signature
  PairSide minor;

  bool is_seed() const { return kind == Kind::seed; }
};

/// Builds S(alpha, beta); nullopt when the pair is singular (both multiplied
/// signatures coincide).
inline std::optional<SPair> make_spair(const ModuleOrderContext& ctx, const LabeledPoly& alpha,
                                       const LabeledPoly& beta) {
  if (alpha.poly.is_zero() || beta.poly.is_zero()) throw std::invalid_argument("S-pair of a zero element");
  const Monomial lambda = lcm(alpha.lead(), beta.lead());
  PairSide a{quotient(lambda, alpha.lead()), alpha.ordinal};
  PairSide b{quotient(lambda, beta.lead()), beta.ordinal};
  const Signature sa = sig_mul(alpha.sig, a.mult);
  const Signature sb = sig_mul(beta.sig, b.mult);
  const auto c = ctx.compare(sa, sb);
  if (c == 0) return std::nullopt;
  SPair p;
  p.lcm = lambda;
  if (c > 0) {
    p.sig = sa;
    p.major = a;
    p.minor = b;
  } else {
    p.sig = sb;
    p.major = b;
    p.minor = a;
  }
  return p;
}

/// Divisibility-minimal set of known syzygy signatures.
class SyzygySigSet {
public:
  /// The first member dividing `t`, if any.
  const Signature* find_divisor(const Signature& t) const {
    for (const Signature& s : sigs_)
      if (sig_divides(s, t)) return &s;
    return nullptr;
  }

  bool covers(const Signature& t) const { return find_divisor(t) != nullptr; }

  /// Inserts `t` unless a member already divides it, dropping members that
  /// `t` divides. Returns whether the set changed.
  bool insert(const Signature& t) {
    if (covers(t)) return false;
    std::erase_if(sigs_, [&](const Signature& s) { return sig_divides(t, s); });
    sigs_.push_back(t);
    return true;
  }

  std::span<const Signature> members() const { return sigs_; }
  std::size_t size() const { return sigs_.size(); }

private:
  std::vector<Signature> sigs_;
};

enum class RewriteRule { add, rat };

inline std::string_view to_string(RewriteRule r) { return r == RewriteRule::add ? "add" : "rat"; }

inline std::optional<RewriteRule> parse_rewrite_rule(std::string_view s) {
  if (s == "add") return RewriteRule::add;
  if (s == "rat") return RewriteRule::rat;
  return std::nullopt;
}

/// Rewrite order on basis members: `add` prefers later insertions, `rat`
/// compares sigma(a)*lt(b) against sigma(b)*lt(a), then signatures. The
/// maximum of a candidate set is its canonical rewriter.
inline std::strong_ordering rewrite_compare(const ModuleOrderContext& ctx, RewriteRule rule,
                                            const LabeledPoly& a, const LabeledPoly& b) {
  if (rule == RewriteRule::add) return a.ordinal <=> b.ordinal;
  const auto c = ctx.compare(sig_mul(a.sig, b.lead()), sig_mul(b.sig, a.lead()));
  if (c != 0) return c;
  return ctx.compare(a.sig, b.sig);
}

/// Either a basis member or a known syzygy; syzygies outrank every basis
/// member, syzygies among themselves compare by signature.
struct RewriteCandidate {
  const LabeledPoly* element = nullptr;  // null for a syzygy
  Signature syzygy;
};

inline std::strong_ordering rewrite_compare(const ModuleOrderContext& ctx, RewriteRule rule,
                                            const RewriteCandidate& a, const RewriteCandidate& b) {
  if (!a.element && !b.element) return ctx.compare(a.syzygy, b.syzygy);
  if (!a.element) return std::strong_ordering::greater;
  if (!b.element) return std::strong_ordering::less;
  return rewrite_compare(ctx, rule, *a.element, *b.element);
}

enum class RewriteScope { syzygies, basis, both };

/// The canonical rewriter found for a side, when it is not the side itself.
struct Rewriter {
  bool syzygy = false;
  Signature sig;           // signature of the rewriting element or syzygy
  std::size_t ordinal = 0; // basis ordinal, when !syzygy
  Monomial mult;           // rewriter * mult has the side's signature
};

/// Whether mult*basis[ordinal] is not the canonical rewriter in its signature
/// T. Any syzygy signature dividing T rewrites; otherwise the rewrite-order
/// maximum among basis members whose signature divides T decides.
inline std::optional<Rewriter> find_rewriter(const ModuleOrderContext& ctx, const PairSide& side,
                                             const SyzygySigSet& syzygies, std::span<const LabeledPoly> basis,
                                             RewriteRule rule, RewriteScope scope) {
  const LabeledPoly& alpha = basis[side.ordinal];
  const Signature t = sig_mul(alpha.sig, side.mult);
  if (scope != RewriteScope::basis) {
    if (const Signature* h = syzygies.find_divisor(t)) return Rewriter{true, *h, 0, sig_div(t, *h)};
  }
  if (scope == RewriteScope::syzygies) return std::nullopt;
  const LabeledPoly* best = &alpha;
  for (const LabeledPoly& beta : basis) {
    if (beta.ordinal == alpha.ordinal || !sig_divides(beta.sig, t)) continue;
    if (rewrite_compare(ctx, rule, *best, beta) < 0) best = &beta;
  }
  if (best == &alpha) return std::nullopt;
  return Rewriter{false, best->sig, best->ordinal, sig_div(t, best->sig)};
}

inline bool is_rewritable(const ModuleOrderContext& ctx, const PairSide& side, const SyzygySigSet& syzygies,
                          std::span<const LabeledPoly> basis, RewriteRule rule, RewriteScope scope) {
  return find_rewriter(ctx, side, syzygies, basis, rule, scope).has_value();
}

/// Regular s-reduction of f, which has signature `start`: every term t is
/// eliminated by b*beta with lt(b*beta) = t and sigma(b*beta) < start, as
/// long as such a reducer exists. Reducer choice follows select_reducer's
/// rule restricted to eligible members.
inline Polynomial s_reduce_regular(const PrimeField& field, const ModuleOrderContext& ctx, const Signature& start,
                                   const Polynomial& f, std::span<const LabeledPoly> basis) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::vector<Term> scratch;
  std::size_t pos = 0;
  while (pos < terms.size()) {
    const Monomial& t = terms[pos].mono;
    const LabeledPoly* best = nullptr;
    Monomial best_mult;
    for (const LabeledPoly& beta : basis) {
      if (beta.poly.is_zero() || !divides(beta.lead(), t)) continue;
      if (best && grevlex_compare(beta.lead(), best->lead()) >= 0) continue;
      Monomial b = quotient(t, beta.lead());
      if (!ctx.less(sig_mul(beta.sig, b), start)) continue;
      best = &beta;
      best_mult = b;
    }
    if (!best) {
      ++pos;
      continue;
    }
    const Scalar c = field.div(terms[pos].coeff, best->poly.lead_coeff());
    scratch.clear();
    detail::merge_sub_multiple(field, std::span<const Term>(terms).subspan(pos + 1), c, &best_mult,
                               best->poly.terms().subspan(1), scratch);
    terms.resize(pos);
    terms.insert(terms.end(), scratch.begin(), scratch.end());
  }
  return Polynomial::from_sorted(std::move(terms));
}

/// Lead signature of pi(alpha)*gamma - pi(gamma)*alpha, or nullopt when the
/// two candidate terms coincide.
inline std::optional<Signature> principal_syzygy_signature(const ModuleOrderContext& ctx, const LabeledPoly& alpha,
                                                           const LabeledPoly& gamma) {
  const Signature a = sig_mul(gamma.sig, alpha.lead());
  const Signature b = sig_mul(alpha.sig, gamma.lead());
  if (a == b) return std::nullopt;
  return ctx.max(a, b);
}

struct RbOptions {
  ModuleOrder order = ModuleOrder::pot;
  RewriteRule rewrite = RewriteRule::rat;
  bool update_syz = false;
  bool product_criterion = false;  // use the Rewritable' check
  bool prefilter = false;          // also check rewritability when pairs are generated
  bool koszul_seed = false;       // seed H with the Koszul signatures of the inputs
};

enum class Decision { reduced, zero, vanished, rewritten_h, rewritten_g, pc_removed, singular };

inline std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::reduced: return "reduced";
    case Decision::zero: return "zero";
    case Decision::vanished: return "zero-spoly";
    case Decision::rewritten_h: return "rewritten-H";
    case Decision::rewritten_g: return "rewritten-G";
    case Decision::pc_removed: return "pc-removed";
    case Decision::singular: return "singular";
  }
  return "?";
}

/// One decision about one pair. Stage: 0 = no criterion fired, 1 = syzygy
/// check, 2 = product criterion, 3 = basis rewriting.
struct RbEvent {
  std::size_t pair = 0;
  Signature sig;
  Decision decision = Decision::reduced;
  int stage = 0;
  bool seed = false;
  bool at_generation = false;
  std::size_t major = 0;  // ordinals; unused for seeds
  std::size_t minor = 0;
  std::optional<Rewriter> rewriter;
  std::optional<std::size_t> inserted;  // ordinal of the new basis member
};

inline std::string format_event(const RbEvent& e, std::span<const std::string> names) {
  return "pair=" + std::to_string(e.pair) + " sig=" + to_string(e.sig, names) +
         " decision=" + std::string(to_string(e.decision)) + " stage=" + std::to_string(e.stage);
}

struct RunStats {
  std::size_t zero_reductions = 0;
  std::size_t zero_spolys = 0;  // pair polynomial was 0 before any reduction step
  std::size_t nonzero_reductions = 0;
  std::size_t pc_fulfilled = 0;
  std::size_t pc_miss_h = 0;   // PC pairs not rewritable w.r.t. H
  std::size_t pc_miss_hg = 0;  // ... nor w.r.t. G
  std::size_t spairs_generated = 0;
  std::size_t spairs_singular = 0;
  std::size_t spairs_rewritten_h = 0;
  std::size_t spairs_rewritten_g = 0;
  std::size_t spairs_removed_pc = 0;
  std::size_t syzygies_koszul = 0;
  std::size_t syzygies_update = 0;
  // Mixed-index PC pairs (7.1) and PC pairs with an e_k generator (7.2)
  // seen under pot, and how many of them escaped the syzygy check.
  std::size_t pc_mixed_index = 0;
  std::size_t pc_mixed_index_missed = 0;
  std::size_t pc_unit_generator = 0;
  std::size_t pc_unit_generator_missed = 0;
  // Internal consistency counters; always zero on a correct run.
  std::size_t duplicate_signatures = 0;
  std::size_t zero_already_covered = 0;
  std::size_t order_violations = 0;
};

struct RbResult {
  ModuleOrderContext ctx;
  std::vector<LabeledPoly> basis;
  SyzygySigSet syzygies;
  RunStats stats;
  std::vector<RbEvent> events;

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (const LabeledPoly& g : basis) out.push_back(g.poly);
    return out;
  }
};

/// The rewrite basis algorithm over sig-poly pairs: pairs are processed by
/// increasing signature, checked by the rewritten criterion (optionally with
/// the product criterion interleaved), regular s-reduced and either recorded
/// as a syzygy signature or added to the basis.
class RbEngine {
public:
  RbEngine(const PrimeField& field, std::span<const Polynomial> inputs, RbOptions options)
      : field_(field), options_(options), ctx_(options.order, inputs), inputs_(inputs.begin(), inputs.end()) {
    if (inputs_.empty()) throw std::invalid_argument("empty input");
  }

  RbResult run() {
    const auto m = static_cast<std::uint32_t>(inputs_.size());
    for (std::uint32_t i = 1; i <= m; ++i) {
      SPair seed;
      seed.kind = SPair::Kind::seed;
      seed.id = next_pair_id_++;
      seed.sig = Signature{Monomial(inputs_[0].lead_monomial().size()), i};
      seed.lcm = inputs_[i - 1].lead_monomial();
      push(seed);
    }
    if (options_.koszul_seed)
    for (std::uint32_t i = 1; i <= m; ++i)
      for (std::uint32_t j = i + 1; j <= m; ++j)
        if (syzygies_.insert(koszul_signature(ctx_, i, j))) ++stats_.syzygies_koszul;

    std::optional<Signature> last;
    while (!queue_.empty()) {
      std::pop_heap(queue_.begin(), queue_.end(), queue_after());
      SPair p = std::move(queue_.back());
      queue_.pop_back();
      if (last && ctx_.less(p.sig, *last)) ++stats_.order_violations;
      last = p.sig;
      process(p);
    }
    return RbResult{ctx_, std::move(basis_), std::move(syzygies_), stats_, std::move(events_)};
  }

private:
  // Heap comparator: true when a is processed after b.
  struct QueueAfter {
    const ModuleOrderContext* ctx;
    bool operator()(const SPair& a, const SPair& b) const {
      const auto c = ctx->compare(a.sig, b.sig);
      if (c != 0) return c > 0;
      const auto l = grevlex_compare(a.lcm, b.lcm);
      if (l != 0) return l > 0;
      return a.id > b.id;
    }
  };
  QueueAfter queue_after() const { return QueueAfter{&ctx_}; }

  void push(SPair p) {
    queue_.push_back(std::move(p));
    std::push_heap(queue_.begin(), queue_.end(), queue_after());
  }

  RbEvent make_event(const SPair& p) const {
    RbEvent e;
    e.pair = p.id;
    e.sig = p.sig;
    e.seed = p.is_seed();
    e.major = p.major.ordinal;
    e.minor = p.minor.ordinal;
    return e;
  }

  void process(const SPair& p) {
    RbEvent e = make_event(p);
    if (p.is_seed() ? seed_removed(p, e) : pair_removed(p, e)) {
      events_.push_back(std::move(e));
      return;
    }
    Polynomial f;
    if (p.is_seed()) {
      f = make_monic(field_, inputs_[p.sig.index - 1]);
    } else {
      const LabeledPoly& a = basis_[p.major.ordinal];
      const LabeledPoly& b = basis_[p.minor.ordinal];
      f = sub_multiple(field_, mul_term(field_, a.poly, Term{field_.one(), p.major.mult}), field_.one(),
                       p.minor.mult, b.poly);
    }
    const bool vanished = f.is_zero();
    f = s_reduce_regular(field_, ctx_, p.sig, f, basis_);
    if (f.is_zero()) {
      ++(vanished ? stats_.zero_spolys : stats_.zero_reductions);
      if (syzygies_.covers(p.sig)) ++stats_.zero_already_covered;
      syzygies_.insert(p.sig);
      e.decision = vanished ? Decision::vanished : Decision::zero;
      events_.push_back(std::move(e));
      return;
    }
    ++stats_.nonzero_reductions;
    e.decision = Decision::reduced;
    e.inserted = basis_.size();
    events_.push_back(std::move(e));
    insert(LabeledPoly{p.sig, make_monic(field_, f), basis_.size()});
  }

  bool seed_removed(const SPair& p, RbEvent& e) {
    if (const Signature* h = syzygies_.find_divisor(p.sig)) {
      e.decision = Decision::rewritten_h;
      e.stage = 1;
      e.rewriter = Rewriter{true, *h, 0, sig_div(p.sig, *h)};
      return true;
    }
    for (const LabeledPoly& g : basis_) {
      if (sig_divides(g.sig, p.sig)) {
        e.decision = Decision::rewritten_g;
        e.stage = 3;
        e.rewriter = Rewriter{false, g.sig, g.ordinal, sig_div(p.sig, g.sig)};
        return true;
      }
    }
    return false;
  }

  std::optional<Rewriter> rewriter_of(const SPair& p, RewriteScope scope) const {
    if (auto r = find_rewriter(ctx_, p.major, syzygies_, basis_, options_.rewrite, scope)) return r;
    return find_rewriter(ctx_, p.minor, syzygies_, basis_, options_.rewrite, scope);
  }

  // Rewritable (plain) or Rewritable' (with the product criterion between
  // the syzygy check and the basis check).
  bool pair_removed(const SPair& p, RbEvent& e) {
    const LabeledPoly& a = basis_[p.major.ordinal];
    const LabeledPoly& b = basis_[p.minor.ordinal];
    const bool pc = coprime(a.lead(), b.lead());
    const auto by_h = rewriter_of(p, RewriteScope::syzygies);
    if (pc) {
      ++stats_.pc_fulfilled;
      if (options_.order == ModuleOrder::pot) {
        const bool unit = (a.sig.index == b.sig.index) && (a.sig.mono.is_one() || b.sig.mono.is_one());
        if (a.sig.index != b.sig.index) {
          ++stats_.pc_mixed_index;
          if (!by_h) ++stats_.pc_mixed_index_missed;
        } else if (unit) {
          ++stats_.pc_unit_generator;
          if (!by_h) ++stats_.pc_unit_generator_missed;
        }
      }
    }
    if (by_h) {
      ++stats_.spairs_rewritten_h;
      e.decision = Decision::rewritten_h;
      e.stage = 1;
      e.rewriter = by_h;
      return true;
    }
    const auto by_g = rewriter_of(p, RewriteScope::basis);
    if (pc) {
      ++stats_.pc_miss_h;
      if (!by_g) ++stats_.pc_miss_hg;
      if (options_.product_criterion) {
        // pi(a)*b - pi(b)*a is a syzygy whose lead signature is the pair's.
        syzygies_.insert(p.sig);
        ++stats_.spairs_removed_pc;
        e.decision = Decision::pc_removed;
        e.stage = 2;
        return true;
      }
    }
    if (by_g) {
      ++stats_.spairs_rewritten_g;
      e.decision = Decision::rewritten_g;
      e.stage = 3;
      e.rewriter = by_g;
      return true;
    }
    return false;
  }

  void insert(LabeledPoly gamma) {
    for (const LabeledPoly& g : basis_)
      if (g.sig == gamma.sig) ++stats_.duplicate_signatures;
    basis_.push_back(std::move(gamma));
    const LabeledPoly& g = basis_.back();
    update_syz(g);
    for (std::size_t k = 0; k + 1 < basis_.size(); ++k) {
      ++stats_.spairs_generated;
      auto p = make_spair(ctx_, basis_[k], g);
      if (!p) {
        ++stats_.spairs_singular;
        RbEvent e;
        e.pair = next_pair_id_++;
        e.sig = sig_mul(g.sig, quotient(lcm(g.lead(), basis_[k].lead()), g.lead()));
        e.decision = Decision::singular;
        e.at_generation = true;
        e.major = g.ordinal;
        e.minor = k;
        events_.push_back(std::move(e));
        continue;
      }
      p->id = next_pair_id_++;
      if (options_.prefilter) {
        RbEvent e = make_event(*p);
        if (auto r = rewriter_of(*p, RewriteScope::both)) {
          e.at_generation = true;
          e.rewriter = r;
          e.decision = r->syzygy ? Decision::rewritten_h : Decision::rewritten_g;
          e.stage = r->syzygy ? 1 : 3;
          ++(r->syzygy ? stats_.spairs_rewritten_h : stats_.spairs_rewritten_g);
          events_.push_back(std::move(e));
          continue;
        }
      }
      push(std::move(*p));
    }
  }

  void update_syz(const LabeledPoly& gamma) {
    if (!options_.update_syz || basis_.size() < 2) return;
    const std::span<const LabeledPoly> prior(basis_.data(), basis_.size() - 1);
    const bool incremental = options_.order == ModuleOrder::pot || options_.order == ModuleOrder::pot_rev;
    if (incremental) {
      // Only when gamma opens a new index; the basis is then complete for
      // all earlier indices.
      const bool jump = std::all_of(prior.begin(), prior.end(), [&](const LabeledPoly& a) {
        return ctx_.index_after(gamma.sig.index, a.sig.index);
      });
      if (!jump) return;
    }
    // d-pot pairs gamma with every member; lt-pot only with members of
    // earlier indices.
    const bool all_members = options_.order == ModuleOrder::d_pot;
    for (const LabeledPoly& alpha : prior) {
      if (!all_members && !ctx_.index_after(gamma.sig.index, alpha.sig.index)) continue;
      if (auto s = principal_syzygy_signature(ctx_, alpha, gamma))
        if (syzygies_.insert(*s)) ++stats_.syzygies_update;
    }
  }

  const PrimeField& field_;
  RbOptions options_;
  ModuleOrderContext ctx_;
  std::vector<Polynomial> inputs_;
  std::vector<LabeledPoly> basis_;
  SyzygySigSet syzygies_;
  std::vector<SPair> queue_;
  std::vector<RbEvent> events_;
  RunStats stats_;
  std::size_t next_pair_id_ = 0;
};

inline RbResult rb_run(const PrimeField& field, std::span<const Polynomial> inputs, RbOptions options) {
  return RbEngine(field, inputs, options).run();
}

}  // namespace sigrb

#endif
