#ifndef SIGRB_PROBLEM_HPP
#define SIGRB_PROBLEM_HPP

#include <sigrb/field.hpp>
#include <sigrb/monomial.hpp>
#include <sigrb/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigrb {

/// A polynomial system: characteristic, variables (declaration order is the
/// descending variable order) and nonzero generators.
struct ProblemSpec {
  std::string name;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;

  PrimeField field() const { return PrimeField(characteristic); }

  bool homogeneous() const {
    return std::all_of(generators.begin(), generators.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
  }
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

// Recursive descent over + - * ^ and parentheses:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' integer]
//   atom   := integer | variable | '(' expr ')'
class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const PrimeField& field, const std::vector<std::string>& vars,
                   std::size_t line)
      : text_(text), field_(field), vars_(vars), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(Scalar c) const {
    if (c.is_zero()) return {};
    return Polynomial::from_sorted({Term{c, Monomial(vars_.size())}});
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = scale(field_, acc, field_.neg(field_.one()));
    for (;;) {
      if (accept('+')) acc = add(field_, acc, term());
      else if (accept('-')) acc = sub(field_, acc, term());
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = mul(field_, acc, power());
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::uint64_t e = integer_digits();
    if (e > UINT16_MAX) fail("exponent too large");
    Polynomial acc = constant(field_.one());
    for (std::uint64_t i = 0; i < e; ++i) acc = mul(field_, acc, base);
    return acc;
  }

  std::uint64_t integer_digits() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Coefficients may exceed p; reduce digit by digit.
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = (v * 10 + (text_[pos_++] - '0')) % field_.characteristic();
      return constant(field_.from_integer(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      Monomial m(vars_.size());
      m.set(static_cast<std::size_t>(it - vars_.begin()), 1);
      return Polynomial::from_sorted({Term{field_.one(), m}});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PrimeField& field_;
  const std::vector<std::string>& vars_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool valid_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace detail

/// Parses a single polynomial over the given variables.
inline Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                                   const std::vector<std::string>& vars, std::size_t line = 0) {
  return detail::ExpressionParser(text, field, vars, line).parse();
}

/// Problem file grammar:
///
///     # comment
///     char 32003          (optional, defaults to 32003)
///     vars x, y, z, t     (declaration order = descending variable order)
///     y*z - z^2           (one generator per line)
///
/// Trailing `,` or `;` on generator lines is ignored.
inline ProblemSpec parse_problem(std::string_view text, std::string name = {}) {
  ProblemSpec spec;
  spec.name = std::move(name);
  bool have_char = false, have_vars = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<PrimeField> field;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto keyword = [&](std::string_view kw) {
      return line.size() > kw.size() && line.substr(0, kw.size()) == kw &&
             std::isspace(static_cast<unsigned char>(line[kw.size()]));
    };
    if (keyword("char")) {
      if (have_char || have_vars) throw ParseError(lineno, "'char' must come first and only once");
      const std::string arg(detail::trim(line.substr(4)));
      std::uint64_t p = 0;
      if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || arg.size() > 12)
        throw ParseError(lineno, "invalid characteristic '" + arg + "'");
      p = std::stoull(arg);
      if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw ParseError(lineno, "characteristic " + arg + " is not a prime below 2^31");
      spec.characteristic = static_cast<std::uint32_t>(p);
      have_char = true;
      continue;
    }
    if (keyword("vars")) {
      if (have_vars) throw ParseError(lineno, "duplicate 'vars' line");
      std::string_view rest = line.substr(4);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view v = detail::trim(rest.substr(0, comma));
        if (!detail::valid_identifier(v)) throw ParseError(lineno, "invalid variable name '" + std::string(v) + "'");
        if (std::find(spec.variables.begin(), spec.variables.end(), v) != spec.variables.end())
          throw ParseError(lineno, "duplicate variable '" + std::string(v) + "'");
        spec.variables.emplace_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      if (spec.variables.empty()) throw ParseError(lineno, "no variables declared");
      if (spec.variables.size() > Monomial::kMaxVariables) throw ParseError(lineno, "too many variables");
      have_vars = true;
      field.emplace(spec.characteristic);
      continue;
    }
    if (!have_vars) throw ParseError(lineno, "generator before 'vars' declaration");
    while (!line.empty() && (line.back() == ',' || line.back() == ';')) line = detail::trim(line.substr(0, line.size() - 1));
    Polynomial f = parse_polynomial(line, *field, spec.variables, lineno);
    if (f.is_zero()) throw ParseError(lineno, "generator is zero");
    spec.generators.push_back(std::move(f));
  }
  if (!have_vars) throw ParseError(lineno, "missing 'vars' declaration");
  if (spec.generators.empty()) throw ParseError(lineno, "no generators");
  return spec;
}

/// Canonical text form; parse_problem(format_problem(s)) reproduces s.
inline std::string format_problem(const ProblemSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "# " + spec.name + "\n";
  out += "char " + std::to_string(spec.characteristic) + "\n";
  out += "vars ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) out += (i ? ", " : "") + spec.variables[i];
  out += "\n";
  const PrimeField field = spec.field();
  for (const Polynomial& f : spec.generators) out += to_string(field, f, spec.variables) + "\n";
  return out;
}

/// Reads and parses a problem file; the name defaults to the file stem.
inline ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str(), path.stem().string());
}

}  // namespace sigrb

#endif
