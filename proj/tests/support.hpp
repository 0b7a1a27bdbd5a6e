#ifndef SIGRB_TESTS_SUPPORT_HPP
#define SIGRB_TESTS_SUPPORT_HPP

#include <sigrb/sigrb.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sigrb::testing {

inline ProblemSpec quadrics() { return load_problem(SIGRB_DATA_DIR "/quadrics.sys"); }
inline ProblemSpec rewrite3() { return load_problem(SIGRB_DATA_DIR "/rewrite3.sys"); }

/// Ring F_p[x, y, z, t] for hand-written examples.
struct Ring {
  PrimeField field;
  std::vector<std::string> vars;

  explicit Ring(std::uint32_t p = 7, std::vector<std::string> names = {"x", "y", "z", "t"})
      : field(p), vars(std::move(names)) {}

  Polynomial poly(std::string_view text) const { return parse_polynomial(text, field, vars); }
  Monomial mono(std::string_view text) const { return poly(text).lead_monomial(); }
  std::string str(const Polynomial& f) const { return to_string(field, f, vars); }
  std::string str(const Monomial& m) const { return to_string(m, vars); }
  std::string str(const Signature& s) const { return to_string(s, vars); }
  Signature sig(std::string_view mono_text, std::uint32_t index) const { return Signature{mono(mono_text), index}; }
};

inline std::vector<ProblemSpec> small_corpus() {
  std::vector<ProblemSpec> out{quadrics(), rewrite3(), gen_cyclic(4), gen_katsura(3)};
  for (ProblemSpec& s : binomial_family(12)) out.push_back(std::move(s));
  return out;
}

}  // namespace sigrb::testing

#endif
