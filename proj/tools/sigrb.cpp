#include <sigrb/sigrb.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace sigrb;

namespace {

struct RunArgs {
  std::string file;
  std::string engine = "rb";
  std::string order = "pot";
  std::string rewrite = "rat";
  bool update_syz = false;
  bool pc = false;
  bool prefilter = false;
  bool koszul = false;
  bool all = false;
  std::string report = "table";
  std::string verify = "certificate";
  std::string log;
  std::string basis_out;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// The basis as a problem file over the input's ring.
std::string basis_text(const ProblemSpec& spec, std::vector<Polynomial> basis) {
  ProblemSpec out{spec.name + " basis", spec.characteristic, spec.variables, std::move(basis)};
  return format_problem(out);
}

int cmd_run(const RunArgs& a) {
  const ProblemSpec spec = load_problem(a.file);
  const auto format = parse_report_format(a.report);
  if (!format) throw std::invalid_argument("unknown report format '" + a.report + "'");
  const std::map<std::string, Verification> modes{
      {"none", Verification::none}, {"certificate", Verification::certificate}, {"full", Verification::full}};
  const auto mode = modes.find(a.verify);
  if (mode == modes.end()) throw std::invalid_argument("unknown verification mode '" + a.verify + "'");

  if (a.all) {
    std::vector<ReportRow> rows;
    for (RunRecord& r : run_experiment(spec, config_matrix(), mode->second)) rows.push_back(std::move(r.row));
    std::cout << emit_report(std::move(rows), *format);
    return 0;
  }

  Config c;
  c.engine = a.engine == "gm" ? Engine::gm : Engine::rb;
  if (a.engine != "gm" && a.engine != "rb") throw std::invalid_argument("unknown engine '" + a.engine + "'");
  const auto order = parse_module_order(a.order);
  if (!order) throw std::invalid_argument("unknown module order '" + a.order + "'");
  if (a.rewrite != "add" && a.rewrite != "rat") throw std::invalid_argument("unknown rewrite order '" + a.rewrite + "'");
  c.order = *order;
  c.rewrite = a.rewrite == "add" ? RewriteRule::add : RewriteRule::rat;
  c.update_syz = a.update_syz;
  c.pc = a.pc;

  const PrimeField field = spec.field();
  ReportRow row{spec.name, c};
  std::vector<Polynomial> basis;
  std::string log;
  if (c.engine == Engine::gm) {
    const GmResult g = buchberger_run(field, spec.generators);
    basis = g.basis;
    row.zero_reductions = g.stats.zero_reductions;
    for (const GmEvent& e : g.events) log += format_event(e, spec.variables) + "\n";
  } else {
    RbOptions opt = c.rb_options();
    opt.prefilter = a.prefilter;
    opt.koszul_seed = a.koszul;
    const RbResult r = rb_run(field, spec.generators, opt);
    basis = r.polynomials();
    row.zero_reductions = r.stats.zero_reductions;
    row.pc_miss_h = r.stats.pc_miss_h;
    row.pc_miss_hg = r.stats.pc_miss_hg;
    for (const RbEvent& e : r.events) log += format_event(e, spec.variables) + "\n";
  }
  row.basis_size = basis.size();
  if (mode->second != Verification::none) row.verified = verify_gb(field, basis);

  if (!a.log.empty()) write_file(a.log, log);
  if (!a.basis_out.empty()) write_file(a.basis_out, basis_text(spec, basis));
  std::cout << emit_report({row}, *format);
  return row.verified == false ? 1 : 0;
}

int cmd_verify(const std::string& file, const std::string& basis_file) {
  const ProblemSpec spec = load_problem(file);
  const ProblemSpec g = load_problem(basis_file);
  if (g.characteristic != spec.characteristic || g.variables != spec.variables)
    throw std::invalid_argument("basis file ring differs from the input ring");
  const PrimeField field = spec.field();
  const bool gb = verify_gb(field, g.generators);
  const bool covers = gb && contained_in(field, spec.generators, g.generators);
  const std::vector<Polynomial> ref = buchberger_run(field, spec.generators).basis;
  const bool inside = contained_in(field, g.generators, ref);
  std::cout << "groebner basis: " << (gb ? "yes" : "no") << "\n"
            << "contains input ideal: " << (covers ? "yes" : gb ? "no" : "unknown") << "\n"
            << "inside input ideal: " << (inside ? "yes" : "no") << "\n";
  const bool ok = gb && covers && inside;
  std::cout << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature-based Groebner basis engines over prime fields"};
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Compute a Groebner basis of a problem file");
  run_cmd->add_option("file", run.file, "Problem file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--engine", run.engine, "rb or gm")->check(CLI::IsMember({"rb", "gm"}));
  run_cmd->add_option("--module-order", run.order, "pot, pot-rev, dpot or ltpot");
  run_cmd->add_option("--rewrite", run.rewrite, "add or rat")->check(CLI::IsMember({"add", "rat"}));
  run_cmd->add_flag("--update-syz", run.update_syz, "Add principal syzygy signatures to H");
  run_cmd->add_flag("--product-criterion", run.pc, "Use the product criterion inside the rewrite check");
  run_cmd->add_flag("--prefilter", run.prefilter, "Also check rewritability when pairs are generated");
  run_cmd->add_flag("--koszul", run.koszul, "Seed H with the Koszul signatures of the inputs");
  run_cmd->add_flag("--all-configs", run.all, "Run the full engine x order x rewrite x U x PC matrix");
  run_cmd->add_option("--report", run.report, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  run_cmd->add_option("--verify", run.verify, "none, certificate or full")
      ->check(CLI::IsMember({"none", "certificate", "full"}));
  run_cmd->add_option("--log", run.log, "Write the per-pair event log here");
  run_cmd->add_option("--basis-out", run.basis_out, "Write the basis as a problem file here");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a benchmark system");
  gen_cmd->require_subcommand(1);
  std::string out_path;
  bool homogenize = false;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  std::size_t n = 4, count = 4;
  unsigned d = 2;
  std::uint64_t seed = 0;
  for (CLI::App* sub : {gen_cmd->add_subcommand("binomial", "Random homogeneous binomials"),
                        gen_cmd->add_subcommand("cyclic", "cyclic-n"),
                        gen_cmd->add_subcommand("katsura", "katsura-n")}) {
    sub->add_option("-n,--vars", n, "Size parameter")->check(CLI::Range(1, 64));
    sub->add_option("-o,--output", out_path, "Output file, stdout by default");
    sub->add_option("--char", characteristic, "Field characteristic");
    sub->add_flag("--homogenize", homogenize, "Append a homogenizing variable h");
    if (sub->get_name() == "binomial") {
      sub->add_option("-d,--degree", d, "Degree")->check(CLI::Range(1, 64));
      sub->add_option("-c,--count", count, "Number of generators")->check(CLI::Range(1, 1000));
      sub->add_option("-s,--seed", seed, "Seed");
    }
  }

  std::string verify_file, verify_basis;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a basis file against a problem file");
  verify_cmd->add_option("file", verify_file, "Problem file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("basis-file", verify_basis, "Basis in problem format")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(verify_file, verify_basis);
    if (*gen_cmd) {
      if (!is_prime(characteristic) || characteristic < 2) throw std::invalid_argument("characteristic is not prime");
      const std::string kind = gen_cmd->get_subcommands().front()->get_name();
      ProblemSpec spec = kind == "binomial" ? gen_binomial(n, d, count, seed, characteristic)
                         : kind == "cyclic" ? gen_cyclic(n, characteristic)
                                            : gen_katsura(n, characteristic);
      if (homogenize) spec = homogenized(spec);
      if (out_path.empty()) std::cout << format_problem(spec);
      else write_file(out_path, format_problem(spec));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "sigrb: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
