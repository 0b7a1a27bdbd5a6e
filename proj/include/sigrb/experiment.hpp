#ifndef SIGRB_EXPERIMENT_HPP
#define SIGRB_EXPERIMENT_HPP

#include <sigrb/gm_engine.hpp>
#include <sigrb/problem.hpp>
#include <sigrb/rb_engine.hpp>
#include <sigrb/signature.hpp>
#include <sigrb/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

namespace sigrb {

enum class Engine { gm, rb };

inline std::string_view to_string(Engine e) { return e == Engine::gm ? "gm" : "rb"; }

struct Config {
  Engine engine = Engine::rb;
  ModuleOrder order = ModuleOrder::pot;
  RewriteRule rewrite = RewriteRule::rat;
  bool update_syz = false;
  bool pc = false;

  RbOptions rb_options() const { return RbOptions{order, rewrite, update_syz, pc}; }

  /// `gm`, `rb pot rat`, `rb lt-pot add U+PC`, ...
  std::string label() const {
    if (engine == Engine::gm) return "gm";
    std::string s = "rb " + std::string(to_string(order)) + " " + std::string(to_string(rewrite));
    if (update_syz && pc) s += " U+PC";
    else if (update_syz) s += " U";
    else if (pc) s += " PC";
    return s;
  }

  friend bool operator==(const Config&, const Config&) = default;
};

/// gm first, then rb over order x rewrite x UpdateSyz x PC.
inline std::vector<Config> config_matrix() {
  std::vector<Config> out{Config{Engine::gm}};
  for (ModuleOrder o : {ModuleOrder::pot, ModuleOrder::pot_rev, ModuleOrder::d_pot, ModuleOrder::lt_pot})
    for (RewriteRule r : {RewriteRule::add, RewriteRule::rat})
      for (bool u : {false, true})
        for (bool pc : {false, true}) out.push_back(Config{Engine::rb, o, r, u, pc});
  return out;
}

inline std::size_t matrix_position(const Config& c) {
  const auto m = config_matrix();
  const auto it = std::find(m.begin(), m.end(), c);
  return it == m.end() ? m.size() : static_cast<std::size_t>(it - m.begin());
}

struct ReportRow {
  std::string benchmark;
  Config config;
  std::size_t zero_reductions = 0;
  std::size_t pc_miss_h = 0;   // meaningful only with config.pc
  std::size_t pc_miss_hg = 0;
  std::size_t basis_size = 0;
  std::optional<bool> verified;
};

enum class Verification { none, certificate, full };

struct RunRecord {
  ReportRow row;
  std::vector<Polynomial> basis;
  std::optional<RbResult> rb;
  std::optional<GmResult> gm;
};

inline RunRecord run_config(const ProblemSpec& spec, const Config& config) {
  const PrimeField field = spec.field();
  RunRecord rec;
  rec.row.benchmark = spec.name;
  rec.row.config = config;
  if (config.engine == Engine::gm) {
    rec.gm = buchberger_run(field, spec.generators);
    rec.basis = rec.gm->basis;
    rec.row.zero_reductions = rec.gm->stats.zero_reductions;
  } else {
    rec.rb = rb_run(field, spec.generators, config.rb_options());
    rec.basis = rec.rb->polynomials();
    rec.row.zero_reductions = rec.rb->stats.zero_reductions;
    rec.row.pc_miss_h = rec.rb->stats.pc_miss_h;
    rec.row.pc_miss_hg = rec.rb->stats.pc_miss_hg;
  }
  rec.row.basis_size = rec.basis.size();
  return rec;
}

/// Runs every config on `spec`, in parallel, results in config order.
/// Verification `full` applies Buchberger's criterion to each output;
/// `certificate` does it once for the reduced basis of the first run and
/// then checks each output reduces to that basis and lies in its ideal,
/// which together imply the output is a Groebner basis.
inline std::vector<RunRecord> run_experiment(const ProblemSpec& spec, const std::vector<Config>& configs,
                                             Verification verify = Verification::certificate,
                                             unsigned threads = std::thread::hardware_concurrency()) {
  std::vector<RunRecord> out(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < configs.size();) out[k] = run_config(spec, configs[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(configs.size()))); ++t)
    pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (verify == Verification::none || out.empty()) return out;
  const PrimeField field = spec.field();
  if (verify == Verification::full) {
    for (RunRecord& r : out) r.row.verified = verify_gb(field, r.basis);
    return out;
  }
  const std::vector<Polynomial> reference = reduce_basis(field, out.front().basis);
  const bool reference_ok = verify_gb(field, reference) && contained_in(field, spec.generators, reference);
  for (RunRecord& r : out)
    r.row.verified = reference_ok && reduce_basis(field, r.basis) == reference && contained_in(field, r.basis, reference);
  return out;
}

enum class ReportFormat { table, csv, json };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::table;
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  return std::nullopt;
}

/// `771(17,0)` with PC, `771` without.
inline std::string zero_cell(const ReportRow& r) {
  std::string s = std::to_string(r.zero_reductions);
  if (r.config.engine == Engine::rb && r.config.pc)
    s += "(" + std::to_string(r.pc_miss_h) + "," + std::to_string(r.pc_miss_hg) + ")";
  return s;
}

inline std::vector<ReportRow> sorted_rows(std::vector<ReportRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::forward_as_tuple(a.benchmark, matrix_position(a.config)) <
           std::forward_as_tuple(b.benchmark, matrix_position(b.config));
  });
  return rows;
}

inline std::string emit_report(std::vector<ReportRow> rows, ReportFormat format) {
  rows = sorted_rows(std::move(rows));
  std::ostringstream out;
  switch (format) {
    case ReportFormat::csv: {
      out << "benchmark,engine,order,rewrite,update_syz,pc,zero_reductions,pc_miss_h,pc_miss_hg\n";
      for (const ReportRow& r : rows) {
        const bool rb = r.config.engine == Engine::rb;
        out << r.benchmark << ',' << to_string(r.config.engine) << ','
            << (rb ? std::string(to_string(r.config.order)) : "-") << ','
            << (rb ? std::string(to_string(r.config.rewrite)) : "-") << ',' << (rb ? (r.config.update_syz ? "1" : "0") : "-")
            << ',' << (rb ? (r.config.pc ? "1" : "0") : "-") << ',' << r.zero_reductions << ',';
        if (rb && r.config.pc) out << r.pc_miss_h << ',' << r.pc_miss_hg;
        else out << ',';
        out << '\n';
      }
      break;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const ReportRow& r : rows) {
        const bool rb = r.config.engine == Engine::rb;
        nlohmann::ordered_json j;
        j["benchmark"] = r.benchmark;
        j["engine"] = std::string(to_string(r.config.engine));
        j["order"] = rb ? nlohmann::ordered_json(std::string(to_string(r.config.order))) : nullptr;
        j["rewrite"] = rb ? nlohmann::ordered_json(std::string(to_string(r.config.rewrite))) : nullptr;
        j["update_syz"] = rb ? nlohmann::ordered_json(r.config.update_syz) : nullptr;
        j["pc"] = rb ? nlohmann::ordered_json(r.config.pc) : nullptr;
        j["zero_reductions"] = r.zero_reductions;
        j["pc_miss_h"] = rb && r.config.pc ? nlohmann::ordered_json(r.pc_miss_h) : nullptr;
        j["pc_miss_hg"] = rb && r.config.pc ? nlohmann::ordered_json(r.pc_miss_hg) : nullptr;
        j["basis_size"] = r.basis_size;
        if (r.verified) j["verified"] = *r.verified;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::table: {
      std::size_t wb = 9, wc = 6;
      for (const ReportRow& r : rows) {
        wb = std::max(wb, r.benchmark.size());
        wc = std::max(wc, r.config.label().size());
      }
      auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
      };
      out << pad("benchmark", wb) << "  " << pad("config", wc) << "  zero reductions\n";
      for (const ReportRow& r : rows)
        out << pad(r.benchmark, wb) << "  " << pad(r.config.label(), wc) << "  " << zero_cell(r) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace sigrb

#endif
