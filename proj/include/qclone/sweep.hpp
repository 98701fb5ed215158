#pragma once

// Parameter sweeps over (alpha, j, t), Table 1 reproduction and the flat
// file formats written by the command-line tool.

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclone/cloner.hpp"
#include "qclone/discord.hpp"
#include "qclone/separability.hpp"

namespace qclone {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::vector<double> alpha_list{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double j_min = 0.01;
  double j_max = 0.50;
  double j_step = 0.005;
  int t_points = 91;
  bool scan_phase = false;
  OutputFormat output_format = OutputFormat::Csv;
  std::string output_path;
  /// Drop rows whose output state is not positive semidefinite.
  bool enforce_psd = false;
  /// Emit one minimised row per j instead of the (j, t) grid.
  bool minimize = false;
  unsigned long long seed = 20110101;

  /// Throws ConfigError on empty grids or out-of-range values.
  void validate() const;
  std::vector<double> j_grid() const;
  /// t_points values spanning [0, pi/2] inclusive.
  std::vector<double> t_grid() const;
};

/// Applies one `key = value` setting; keys mirror the RunConfig fields.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);
/// Reads a flat key=value file ('#' starts a comment).
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

OutputFormat parse_output_format(const std::string& s);

struct SweepRecord {
  double alpha = 0.0;
  double j = 0.0;
  /// Absent on minimised rows.
  std::optional<double> t;
  double discord = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
  double min_ppt_eig = 0.0;
  bool physical = true;
  /// "Separable", "Entangled" or "Unphysical".
  std::string classification;
};

inline constexpr const char* kCsvHeader = "alpha,j,t,discord,w3,w4,min_ppt_eig,physical,classification";

/// 12 significant digits, "%.12g".
std::string format_number(double x);

std::vector<SweepRecord> surface_records(double alpha, const RunConfig& cfg);
std::vector<SweepRecord> minimized_records(double alpha, const RunConfig& cfg);

void write_records(std::ostream& os, std::span<const SweepRecord> records, OutputFormat fmt);

/// Writes one table per alpha into the directory cfg.output_path and
/// returns the file paths in alpha order.
std::vector<std::filesystem::path> run_surface(const RunConfig& cfg);

/// File name used by run_surface for a given alpha.
std::string surface_file_name(double alpha, OutputFormat fmt);

/// One row of the published separability table.
struct PublishedTable1Row {
  double alpha;
  bool separable;
  double lo;
  double hi;
};

/// Published row for alpha in {0.1, ..., 0.9}, if any.
std::optional<PublishedTable1Row> published_table1_row(double alpha);

inline constexpr double kTable1EndpointTol = 0.002;

struct Table1Row {
  double alpha = 0.0;
  std::vector<JInterval> intervals;
  std::optional<PublishedTable1Row> published;
  /// Empty when there is no published row to compare against.
  std::optional<bool> match;
};

/// Intervals are clipped to [cfg.j_min, cfg.j_max].
std::vector<Table1Row> table1(const RunConfig& cfg, double scan_step = 1e-4, double tol = 1e-6);
/// True when every row with a published counterpart matches.
bool table1_all_match(std::span<const Table1Row> rows);

void print_table1(std::ostream& os, std::span<const Table1Row> rows);
void write_table1(std::ostream& os, std::span<const Table1Row> rows, OutputFormat fmt);

/// Single-point inspection for the `point` subcommand.
struct PointReport {
  double alpha = 0.0;
  double j = 0.0;
  double fidelity = 0.0;
  DiscordResult discord;
  SeparabilityVerdict verdict;
  JInterval valid_range;
  bool discordant_but_separable = false;
};

inline constexpr double kDiscordPositive = 1e-6;

/// Throws InvalidStateError when (alpha, j) is unphysical.
PointReport evaluate_point(double alpha, double j, bool scan_phase = false);
void print_point(std::ostream& os, const PointReport& r);
void write_point_json(std::ostream& os, const PointReport& r);

}  // namespace qclone
