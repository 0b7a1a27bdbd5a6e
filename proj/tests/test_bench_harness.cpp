#include "support.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace sigrb;

TEST_CASE("parse the quadrics system") {
  const ProblemSpec spec = testing::quadrics();
  CHECK(spec.characteristic == 7);
  CHECK(spec.variables == std::vector<std::string>{"x", "y", "z", "t"});
  REQUIRE(spec.generators.size() == 4);
  CHECK(to_string(spec.field(), spec.generators[3], spec.variables) == "x^2 - x*y");
  CHECK(spec.homogeneous());
  CHECK(spec.name == "quadrics");
}

TEST_CASE("coefficients are reduced modulo p") {
  const ProblemSpec spec = parse_problem("char 7\nvars x, y\n2*x^2 - x*y\n");
  const Polynomial& f = spec.generators.at(0);
  REQUIRE(f.size() == 2);
  CHECK(f[0].coeff == Scalar{2});
  CHECK(f[1].coeff == Scalar{6});
  const ProblemSpec g = parse_problem("char 5\nvars a, b\n(a + b)^2 - 12*a*b + 10,\n");
  CHECK(to_string(g.field(), g.generators[0], g.variables) == "a^2 + b^2");
}

TEST_CASE("default characteristic") {
  const ProblemSpec spec = parse_problem("vars x\nx^2 - 40000\n");
  CHECK(spec.characteristic == 32003);
  CHECK(spec.generators[0][1].coeff == Scalar{32003 - 7997});
  CHECK_FALSE(spec.homogeneous());
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("char 7\nvars x, y\n") == 2);
  CHECK(line_of("char 7\nvars x, y\nx + w\n") == 3);
  CHECK(line_of("char 8\nvars x\nx\n") == 1);
  CHECK(line_of("char 7\nvars x, y\n\n# zero\nx - x\n") == 5);
  CHECK(line_of("char 7\nvars x, y\nx^ + y\n") == 3);
  CHECK(line_of("char 7\nx\n") == 2);
  CHECK(line_of("vars x\nchar 7\nx\n") == 2);
  CHECK(line_of("vars x, x\nx\n") == 1);
  CHECK_THROWS_AS(parse_problem(""), ParseError);
}

TEST_CASE("problem text round-trips") {
  for (const ProblemSpec& spec : testing::small_corpus()) {
    CAPTURE(spec.name);
    const ProblemSpec back = parse_problem(format_problem(spec), spec.name);
    CHECK(back.characteristic == spec.characteristic);
    CHECK(back.variables == spec.variables);
    CHECK(back.generators == spec.generators);
  }
}

TEST_CASE("binomial generator") {
  const ProblemSpec a = gen_binomial(5, 3, 5, 42), b = gen_binomial(5, 3, 5, 42), c = gen_binomial(5, 3, 5, 43);
  CHECK(a.generators == b.generators);
  CHECK_FALSE(a.generators == c.generators);
  CHECK(a.name == "binomial-5-3-s42");
  REQUIRE(a.generators.size() == 5);
  const PrimeField k = a.field();
  for (const Polynomial& f : a.generators) {
    REQUIRE(f.size() == 2);
    CHECK(f[0].coeff == k.one());
    CHECK(f[1].coeff == k.neg(k.one()));
    CHECK(f[0].mono.degree() == 3);
    CHECK(f[1].mono.degree() == 3);
  }
  CHECK(a.homogeneous());
  CHECK_THROWS_AS(gen_binomial(1, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("binomial family") {
  const auto fam = binomial_family(7, 100);
  REQUIRE(fam.size() == 7);
  CHECK(fam[0].name == "binomial-4-2-s100");
  CHECK(fam[5].name == "binomial-6-3-s105");
  CHECK(fam[6].name == "binomial-4-2-s106");
  CHECK(fam[3].generators.size() == 5);
}

TEST_CASE("cyclic and katsura") {
  const ProblemSpec c4 = gen_cyclic(4);
  REQUIRE(c4.generators.size() == 4);
  const auto s = [&](const ProblemSpec& p, std::size_t i) { return to_string(p.field(), p.generators[i], p.variables); };
  CHECK(s(c4, 0) == "x1 + x2 + x3 + x4");
  CHECK(s(c4, 1) == "x1*x2 + x2*x3 + x1*x4 + x3*x4");
  CHECK(s(c4, 3) == "x1*x2*x3*x4 - 1");
  const ProblemSpec k2 = gen_katsura(2);
  REQUIRE(k2.generators.size() == 3);
  CHECK(k2.variables == std::vector<std::string>{"u0", "u1", "u2"});
  CHECK(s(k2, 0) == "u0 + 2*u1 + 2*u2 - 1");
  CHECK(s(k2, 1) == "u0^2 + 2*u1^2 + 2*u2^2 - u0");
  CHECK(s(k2, 2) == "2*u0*u1 + 2*u1*u2 - u1");
}

TEST_CASE("homogenized variants") {
  const ProblemSpec h = homogenized(gen_cyclic(4));
  CHECK(h.name == "cyclic-4-h");
  CHECK(h.variables.back() == "h");
  CHECK(h.homogeneous());
  CHECK(to_string(h.field(), h.generators[3], h.variables) == "x1*x2*x3*x4 - h^4");
}

TEST_CASE("config matrix") {
  const auto m = config_matrix();
  REQUIRE(m.size() == 33);
  CHECK(m[0].label() == "gm");
  CHECK(m[1].label() == "rb pot add");
  CHECK(m[4].label() == "rb pot add U+PC");
  CHECK(m.back().label() == "rb lt-pot rat U+PC");
  CHECK(matrix_position(m[17]) == 17);
}

namespace {

ReportRow row(std::string bench, Config c, std::size_t zeros, std::size_t h = 0, std::size_t hg = 0) {
  ReportRow r;
  r.benchmark = std::move(bench);
  r.config = c;
  r.zero_reductions = zeros;
  r.pc_miss_h = h;
  r.pc_miss_hg = hg;
  return r;
}

}  // namespace

TEST_CASE("report rendering") {
  CHECK(emit_report({}, ReportFormat::csv) ==
        "benchmark,engine,order,rewrite,update_syz,pc,zero_reductions,pc_miss_h,pc_miss_hg\n");
  CHECK(nlohmann::json::parse(emit_report({}, ReportFormat::json)).empty());
  const Config pcfg{Engine::rb, ModuleOrder::d_pot, RewriteRule::rat, true, true};
  CHECK(zero_cell(row("b", pcfg, 771, 17, 0)) == "771(17,0)");
  CHECK(zero_cell(row("b", Config{Engine::rb, ModuleOrder::pot, RewriteRule::rat, true, false}, 16)) == "16");

  const std::vector<ReportRow> rows{row("zeta", Config{Engine::gm}, 3), row("alpha", pcfg, 31, 0, 0),
                                    row("alpha", Config{Engine::gm}, 9)};
  const std::string csv = emit_report(rows, ReportFormat::csv);
  CHECK(csv ==
        "benchmark,engine,order,rewrite,update_syz,pc,zero_reductions,pc_miss_h,pc_miss_hg\n"
        "alpha,gm,-,-,-,-,9,,\n"
        "alpha,rb,d-pot,rat,1,1,31,0,0\n"
        "zeta,gm,-,-,-,-,3,,\n");
  const auto j = nlohmann::json::parse(emit_report(rows, ReportFormat::json));
  REQUIRE(j.size() == 3);
  CHECK(j[1]["pc_miss_h"] == 0);
  CHECK(j[0]["pc_miss_h"].is_null());
  const std::string table = emit_report(rows, ReportFormat::table);
  CHECK(table.find("rb d-pot rat U+PC  31(0,0)") != std::string::npos);
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK_FALSE(parse_report_format("xml").has_value());
}

TEST_CASE("report rows for the quadrics system") {
  const auto recs = run_experiment(testing::quadrics(), config_matrix());
  std::vector<ReportRow> rows;
  for (const RunRecord& r : recs) {
    CHECK(r.row.verified == true);
    rows.push_back(r.row);
  }
  auto zeros = [&](const Config& c) { return recs[matrix_position(c)].row.zero_reductions; };
  CHECK(zeros(Config{Engine::rb, ModuleOrder::lt_pot, RewriteRule::rat, true, false}) == 3);
  CHECK(zeros(Config{Engine::rb, ModuleOrder::lt_pot, RewriteRule::rat, true, true}) == 2);
  CHECK(zeros(Config{Engine::rb, ModuleOrder::pot, RewriteRule::rat, true, false}) == 2);
  CHECK(emit_report(rows, ReportFormat::csv) == emit_report(rows, ReportFormat::csv));
}

TEST_CASE("same seed, same rows") {
  const auto a = run_experiment(gen_binomial(5, 2, 5, 9), config_matrix(), Verification::none, 4);
  const auto b = run_experiment(gen_binomial(5, 2, 5, 9), config_matrix(), Verification::none, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].row.zero_reductions == b[k].row.zero_reductions);
    CHECK(a[k].row.pc_miss_h == b[k].row.pc_miss_h);
    CHECK(a[k].row.basis_size == b[k].row.basis_size);
  }
}

TEST_CASE("full and certificate verification agree") {
  const ProblemSpec spec = gen_katsura(3);
  const auto full = run_experiment(spec, config_matrix(), Verification::full);
  const auto cert = run_experiment(spec, config_matrix(), Verification::certificate);
  for (std::size_t k = 0; k < full.size(); ++k) {
    CHECK(full[k].row.verified == true);
    CHECK(cert[k].row.verified == true);
  }
}
