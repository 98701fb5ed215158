// qclone: sweeps, separability table and single-point reports for the
// Buzek-Hillery cloner output.
//
// Exit codes: 0 success, 2 configuration error, 3 acceptance mismatch,
// 4 I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclone/errors.hpp"
#include "qclone/selftest.hpp"
#include "qclone/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitIo = 4;

// Flags shared by the sweep subcommands. Values are only applied when the
// flag was actually given, so they override the config file.
struct SweepFlags {
  std::string config;
  std::vector<double> alpha;
  double j_min = 0, j_max = 0, j_step = 0;
  int t_points = 0;
  bool scan_phase = false;
  std::string format;
  std::string out;
  bool enforce_psd = false;
  bool minimize = false;
  unsigned long long seed = 0;

  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_j_min = nullptr;
  CLI::Option* o_j_max = nullptr;
  CLI::Option* o_j_step = nullptr;
  CLI::Option* o_t_points = nullptr;
  CLI::Option* o_scan_phase = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_enforce_psd = nullptr;
  CLI::Option* o_minimize = nullptr;
  CLI::Option* o_seed = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "Flat key=value config file");
    o_alpha = app->add_option("--alpha", alpha, "Input amplitudes, comma separated")->delimiter(',');
    o_j_min = app->add_option("--j-min", j_min, "Smallest machine parameter");
    o_j_max = app->add_option("--j-max", j_max, "Largest machine parameter");
    o_j_step = app->add_option("--j-step", j_step, "Machine parameter step");
    o_t_points = app->add_option("--t-points", t_points, "Measurement angles over [0, pi/2]");
    o_scan_phase = app->add_flag("--scan-phase", scan_phase, "Also minimise over the basis phase");
    o_format = app->add_option("--format", format, "csv or json");
    o_out = app->add_option("--out", out, "Output path");
    o_enforce_psd = app->add_flag("--enforce-psd", enforce_psd, "Drop unphysical rows");
    o_minimize = app->add_flag("--minimize", minimize, "One minimised row per j (surface only)");
    o_seed = app->add_option("--seed", seed, "Seed for randomised checks");
  }

  qclone::RunConfig resolve() const {
    qclone::RunConfig cfg;
    if (!config.empty()) cfg = qclone::load_config_file(config, cfg);
    if (o_alpha->count()) cfg.alpha_list = alpha;
    if (o_j_min->count()) cfg.j_min = j_min;
    if (o_j_max->count()) cfg.j_max = j_max;
    if (o_j_step->count()) cfg.j_step = j_step;
    if (o_t_points->count()) cfg.t_points = t_points;
    if (o_scan_phase->count()) cfg.scan_phase = scan_phase;
    if (o_format->count()) cfg.output_format = qclone::parse_output_format(format);
    if (o_out->count()) cfg.output_path = out;
    if (o_enforce_psd->count()) cfg.enforce_psd = enforce_psd;
    if (o_minimize->count()) cfg.minimize = minimize;
    if (o_seed->count()) cfg.seed = seed;
    cfg.validate();
    return cfg;
  }
};

int cmd_surface(const SweepFlags& flags) {
  const auto cfg = flags.resolve();
  for (const auto& path : qclone::run_surface(cfg)) std::cout << path.string() << '\n';
  return 0;
}

int cmd_table1(const SweepFlags& flags) {
  const auto cfg = flags.resolve();
  const auto rows = qclone::table1(cfg);
  qclone::print_table1(std::cout, rows);
  if (!cfg.output_path.empty()) {
    std::ofstream os(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!os) throw qclone::IoError("cannot write " + cfg.output_path);
    qclone::write_table1(os, rows, cfg.output_format);
    if (!os) throw qclone::IoError("write failed for " + cfg.output_path);
  }
  return qclone::table1_all_match(rows) ? 0 : kExitMismatch;
}

int cmd_point(double alpha, double j, bool scan_phase, const std::string& format) {
  if (!format.empty() && format != "text" && format != "json") {
    throw qclone::ConfigError("point: format must be text or json");
  }
  const qclone::InputState in = qclone::InputState::from_alpha(alpha);
  try {
    const auto report = qclone::evaluate_point(alpha, j, scan_phase);
    if (format == "json") {
      qclone::write_point_json(std::cout, report);
    } else {
      qclone::print_point(std::cout, report);
    }
  } catch (const qclone::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (const auto range = qclone::valid_j_range(in)) {
      std::cerr << "physical machine parameters for alpha = " << alpha << ": j in ["
                << qclone::format_number(range->lo) << ", " << qclone::format_number(range->hi) << "]\n";
    } else {
      std::cerr << "no physical machine parameter exists for alpha = " << alpha << '\n';
    }
    return kExitConfig;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord and separability of Buzek-Hillery cloner output"};
  app.require_subcommand(1);

  SweepFlags surface_flags;
  auto* surface = app.add_subcommand("surface", "Discord over (j, t) grids, one table per alpha");
  surface_flags.attach(surface);

  SweepFlags table_flags;
  auto* table = app.add_subcommand("table1", "Separable j-intervals per alpha against the published table");
  table_flags.attach(table);

  double p_alpha = 0.0, p_j = 0.0;
  bool p_phase = false;
  std::string p_format;
  auto* point = app.add_subcommand("point", "Full report for a single (alpha, j)");
  point->add_option("--alpha", p_alpha, "Input amplitude")->required();
  point->add_option("--j", p_j, "Machine parameter")->required();
  point->add_flag("--scan-phase", p_phase, "Also minimise over the basis phase");
  point->add_option("--format", p_format, "text (default) or json");

  unsigned long long st_seed = 20110101;
  auto* selftest = app.add_subcommand("selftest", "Run the randomised property suites");
  selftest->add_option("--seed", st_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*surface) return cmd_surface(surface_flags);
    if (*table) return cmd_table1(table_flags);
    if (*point) return cmd_point(p_alpha, p_j, p_phase, p_format);
    if (*selftest) return qclone::run_selftest(st_seed, std::cout) ? 0 : kExitMismatch;
  } catch (const qclone::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qclone::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qclone::ContractError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qclone::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
