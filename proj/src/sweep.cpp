#include "qclone/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("config: '" + key + "' expects a boolean, got '" + value + "'");
}

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

const char* json_bool(bool b) { return b ? "true" : "false"; }

std::string interval_text(const JInterval& iv) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.3f, %.3f]", iv.lo, iv.hi);
  return buf;
}

SweepRecord base_record(const InputState& in, double j, bool physical) {
  const MachineParams m(j);
  const DensityMatrix4 rho = build_output_state(in, m);
  SweepRecord r;
  r.alpha = in.alpha();
  r.j = j;
  r.w3 = w3_closed(in, m);
  r.w4 = w4_closed(in, m);
  r.min_ppt_eig = min_eigenvalue(partial_transpose_b(rho));
  r.physical = physical;
  if (physical) {
    r.classification = r.min_ppt_eig >= kEigenFloor ? "Separable" : "Entangled";
  } else {
    r.classification = "Unphysical";
  }
  return r;
}

}  // namespace

void RunConfig::validate() const {
  if (alpha_list.empty()) throw ConfigError("config: alpha list is empty");
  for (double a : alpha_list) {
    if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("config: alpha values must lie in [0, 1]");
  }
  if (!(j_min >= 0.0 && j_max <= 0.5 && j_min <= j_max)) {
    throw ConfigError("config: j range must satisfy 0 <= j_min <= j_max <= 0.5");
  }
  if (!(j_step > 0.0)) throw ConfigError("config: j_step must be positive");
  if (t_points < 1) throw ConfigError("config: t_points must be at least 1");
}

std::vector<double> RunConfig::j_grid() const {
  std::vector<double> g;
  for (long k = 0;; ++k) {
    const double j = j_min + static_cast<double>(k) * j_step;
    if (j > j_max + 1e-9 * j_step) break;
    g.push_back(std::min(j, j_max));
  }
  return g;
}

std::vector<double> RunConfig::t_grid() const {
  if (t_points == 1) return {0.0};
  std::vector<double> g(static_cast<std::size_t>(t_points));
  for (int i = 0; i < t_points; ++i) g[i] = (std::numbers::pi / 2.0) * i / (t_points - 1);
  return g;
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw ConfigError("config: format must be csv or json, got '" + s + "'");
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "alpha_list" || key == "alpha") {
    cfg.alpha_list.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) cfg.alpha_list.push_back(parse_double(key, item));
    }
  } else if (key == "j_min") {
    cfg.j_min = parse_double(key, value);
  } else if (key == "j_max") {
    cfg.j_max = parse_double(key, value);
  } else if (key == "j_step") {
    cfg.j_step = parse_double(key, value);
  } else if (key == "t_points") {
    const double v = parse_double(key, value);
    if (v != std::floor(v)) throw ConfigError("config: t_points must be an integer");
    cfg.t_points = static_cast<int>(v);
  } else if (key == "scan_phase") {
    cfg.scan_phase = parse_bool(key, value);
  } else if (key == "output_format" || key == "format") {
    cfg.output_format = parse_output_format(value);
  } else if (key == "output_path" || key == "out") {
    cfg.output_path = value;
  } else if (key == "enforce_psd") {
    cfg.enforce_psd = parse_bool(key, value);
  } else if (key == "minimize") {
    cfg.minimize = parse_bool(key, value);
  } else if (key == "seed") {
    const double v = parse_double(key, value);
    if (v < 0 || v != std::floor(v)) throw ConfigError("config: seed must be a nonnegative integer");
    cfg.seed = static_cast<unsigned long long>(v);
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<SweepRecord> surface_records(double alpha, const RunConfig& cfg) {
  const InputState in = InputState::from_alpha(alpha);
  const auto js = cfg.j_grid();
  const auto ts = cfg.t_grid();
  const auto surface = discord_surface(in, js, ts);

  std::vector<SweepRecord> out;
  out.reserve(surface.size());
  for (std::size_t row = 0; row < js.size(); ++row) {
    const bool physical = surface[row * ts.size()].physical;
    if (cfg.enforce_psd && !physical) continue;
    const SweepRecord base = base_record(in, js[row], physical);
    for (std::size_t col = 0; col < ts.size(); ++col) {
      const SurfacePoint& p = surface[row * ts.size() + col];
      SweepRecord r = base;
      r.t = p.t;
      r.discord = p.discord;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<SweepRecord> minimized_records(double alpha, const RunConfig& cfg) {
  const InputState in = InputState::from_alpha(alpha);
  const auto range = valid_j_range(in);
  DiscordOptions opts;
  opts.scan_phase = cfg.scan_phase;

  std::vector<SweepRecord> out;
  for (double j : cfg.j_grid()) {
    // Minimisation is only defined on states; unphysical rows are dropped.
    if (!range || !range->contains(j)) continue;
    SweepRecord r = base_record(in, j, true);
    r.discord = discord_min(build_output_state(in, MachineParams(j)), opts).discord;
    out.push_back(std::move(r));
  }
  return out;
}

void write_records(std::ostream& os, std::span<const SweepRecord> records, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
      os << format_number(r.alpha) << ',' << format_number(r.j) << ','
         << (r.t ? format_number(*r.t) : std::string()) << ',' << format_number(r.discord) << ','
         << format_number(r.w3) << ',' << format_number(r.w4) << ',' << format_number(r.min_ppt_eig)
         << ',' << json_bool(r.physical) << ',' << r.classification << '\n';
    }
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << "  {\"alpha\": " << json_number(r.alpha) << ", \"j\": " << json_number(r.j)
       << ", \"t\": " << (r.t ? json_number(*r.t) : "null") << ", \"discord\": " << json_number(r.discord)
       << ", \"w3\": " << json_number(r.w3) << ", \"w4\": " << json_number(r.w4)
       << ", \"min_ppt_eig\": " << json_number(r.min_ppt_eig) << ", \"physical\": " << json_bool(r.physical)
       << ", \"classification\": \"" << r.classification << "\"}" << (i + 1 < records.size() ? "," : "")
       << '\n';
  }
  os << "]\n";
}

std::string surface_file_name(double alpha, OutputFormat fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "surface_alpha_%.6g.%s", alpha, fmt == OutputFormat::Csv ? "csv" : "json");
  return buf;
}

std::vector<std::filesystem::path> run_surface(const RunConfig& cfg) {
  cfg.validate();
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output_path.empty() ? fs::path("surface_out") : fs::path(cfg.output_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());

  std::vector<double> alphas = cfg.alpha_list;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  std::vector<fs::path> written;
  for (double alpha : alphas) {
    const auto records = cfg.minimize ? minimized_records(alpha, cfg) : surface_records(alpha, cfg);
    const fs::path file = dir / surface_file_name(alpha, cfg.output_format);
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + file.string());
    write_records(os, records, cfg.output_format);
    if (!os) throw IoError("write failed for " + file.string());
    written.push_back(file);
  }
  return written;
}

std::optional<PublishedTable1Row> published_table1_row(double alpha) {
  static constexpr PublishedTable1Row kRows[] = {
      {0.1, false, 0.0, 0.0},     {0.2, false, 0.0, 0.0},     {0.3, false, 0.0, 0.0},
      {0.4, false, 0.0, 0.0},     {0.5, false, 0.0, 0.0},     {0.6, true, 0.196, 0.238},
      {0.7, true, 0.191, 0.250},  {0.8, true, 0.196, 0.238},  {0.9, false, 0.0, 0.0},
  };
  for (const auto& row : kRows) {
    if (std::abs(row.alpha - alpha) < 1e-9) return row;
  }
  return std::nullopt;
}

std::vector<Table1Row> table1(const RunConfig& cfg, double scan_step, double tol) {
  cfg.validate();
  std::vector<Table1Row> rows;
  for (double alpha : cfg.alpha_list) {
    Table1Row row;
    row.alpha = alpha;
    for (JInterval iv : separable_intervals(InputState::from_alpha(alpha), scan_step, tol)) {
      iv.lo = std::max(iv.lo, cfg.j_min);
      iv.hi = std::min(iv.hi, cfg.j_max);
      if (iv.lo <= iv.hi) row.intervals.push_back(iv);
    }
    row.published = published_table1_row(alpha);
    if (row.published) {
      if (row.published->separable) {
        row.match = row.intervals.size() == 1 &&
                    std::abs(row.intervals[0].lo - row.published->lo) <= kTable1EndpointTol &&
                    std::abs(row.intervals[0].hi - row.published->hi) <= kTable1EndpointTol;
      } else {
        row.match = row.intervals.empty();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool table1_all_match(std::span<const Table1Row> rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.match.value_or(true); });
}

void print_table1(std::ostream& os, std::span<const Table1Row> rows) {
  char line[160];
  std::snprintf(line, sizeof line, "%-7s %-22s %-16s %-12s %s\n", "alpha", "separable j", "published",
                "remark", "match");
  os << line;
  for (const auto& r : rows) {
    std::string found;
    for (const auto& iv : r.intervals) found += (found.empty() ? "" : " ") + interval_text(iv);
    if (found.empty()) found = "none";
    std::string published = "-";
    if (r.published) published = r.published->separable ? interval_text({r.published->lo, r.published->hi, 0.0}) : "j<0";
    const char* remark = r.intervals.empty() ? "Inseparable" : "Separable";
    const char* match = r.match ? (*r.match ? "yes" : "MISMATCH") : "n/a";
    std::snprintf(line, sizeof line, "%-7.3g %-22s %-16s %-12s %s\n", r.alpha, found.c_str(),
                  published.c_str(), remark, match);
    os << line;
  }
}

void write_table1(std::ostream& os, std::span<const Table1Row> rows, OutputFormat fmt) {
  auto remark = [](const Table1Row& r) { return r.intervals.empty() ? "Inseparable" : "Separable"; };
  auto match = [](const Table1Row& r) { return r.match ? (*r.match ? "match" : "mismatch") : "n/a"; };
  if (fmt == OutputFormat::Csv) {
    os << "alpha,lo,hi,remark,published_lo,published_hi,published_remark,match\n";
    for (const auto& r : rows) {
      const std::string plo = r.published && r.published->separable ? format_number(r.published->lo) : "";
      const std::string phi = r.published && r.published->separable ? format_number(r.published->hi) : "";
      const std::string prem = r.published ? (r.published->separable ? "Separable" : "Inseparable") : "";
      auto emit = [&](const std::string& lo, const std::string& hi) {
        os << format_number(r.alpha) << ',' << lo << ',' << hi << ',' << remark(r) << ',' << plo << ','
           << phi << ',' << prem << ',' << match(r) << '\n';
      };
      if (r.intervals.empty()) emit("", "");
      for (const auto& iv : r.intervals) emit(format_number(iv.lo), format_number(iv.hi));
    }
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"alpha\": " << json_number(r.alpha) << ", \"intervals\": [";
    for (std::size_t k = 0; k < r.intervals.size(); ++k) {
      os << (k ? ", " : "") << '[' << json_number(r.intervals[k].lo) << ", " << json_number(r.intervals[k].hi)
         << ']';
    }
    os << "], \"remark\": \"" << remark(r) << "\", \"published\": ";
    if (r.published) {
      os << "{\"separable\": " << json_bool(r.published->separable);
      if (r.published->separable) os << ", \"lo\": " << json_number(r.published->lo) << ", \"hi\": " << json_number(r.published->hi);
      os << '}';
    } else {
      os << "null";
    }
    os << ", \"match\": \"" << match(r) << "\"}" << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

PointReport evaluate_point(double alpha, double j, bool scan_phase) {
  const InputState in = InputState::from_alpha(alpha);
  const MachineParams m(j);
  PointReport r;
  r.alpha = alpha;
  r.j = j;
  r.verdict = classify(in, m);  // refuses unphysical points
  const auto range = valid_j_range(in);
  if (range) r.valid_range = *range;
  r.fidelity = clone_fidelity(in, m);
  DiscordOptions opts;
  opts.scan_phase = scan_phase;
  r.discord = discord_min(build_output_state(in, m), opts);
  r.discordant_but_separable =
      r.verdict.classification == Classification::Separable && r.discord.discord > kDiscordPositive;
  return r;
}

void print_point(std::ostream& os, const PointReport& r) {
  const auto& d = r.discord;
  const auto& v = r.verdict;
  os << "alpha            " << format_number(r.alpha) << '\n'
     << "j                " << format_number(r.j) << '\n'
     << "physical range   [" << format_number(r.valid_range.lo) << ", " << format_number(r.valid_range.hi) << "]\n"
     << "fidelity         " << format_number(r.fidelity) << '\n'
     << "discord          " << format_number(d.discord) << " bits\n"
     << "  optimal t      " << format_number(d.optimal_t) << " rad\n"
     << "  optimal phi    " << format_number(d.optimal_phi) << " rad\n"
     << "  H(a,b)         " << format_number(d.entropy_joint) << '\n'
     << "  H(a)           " << format_number(d.entropy_a) << '\n'
     << "  H(b)           " << format_number(d.entropy_b) << '\n'
     << "  H(a|b)         " << format_number(d.conditional_entropy) << '\n'
     << "  J              " << format_number(d.mutual_info_J) << '\n'
     << "  I              " << format_number(d.mutual_info_I) << '\n'
     << "W3               " << format_number(v.w3) << '\n'
     << "W4               " << format_number(v.w4) << '\n'
     << "min PPT eig      " << format_number(v.min_ppt_eigenvalue) << '\n'
     << "classification   " << to_string(v.classification)
     << (v.agreement ? "" : " (W3/W4 test disagrees)") << '\n';
  if (r.discordant_but_separable) {
    os << "*** discordant-but-separable: nonzero discord without entanglement ***\n";
  }
}

void write_point_json(std::ostream& os, const PointReport& r) {
  const auto& d = r.discord;
  const auto& v = r.verdict;
  os << "{\n"
     << "  \"alpha\": " << json_number(r.alpha) << ",\n"
     << "  \"j\": " << json_number(r.j) << ",\n"
     << "  \"valid_j_range\": [" << json_number(r.valid_range.lo) << ", " << json_number(r.valid_range.hi) << "],\n"
     << "  \"fidelity\": " << json_number(r.fidelity) << ",\n"
     << "  \"discord\": {\"discord\": " << json_number(d.discord) << ", \"optimal_t\": " << json_number(d.optimal_t)
     << ", \"optimal_phi\": " << json_number(d.optimal_phi) << ", \"entropy_joint\": " << json_number(d.entropy_joint)
     << ", \"entropy_a\": " << json_number(d.entropy_a) << ", \"entropy_b\": " << json_number(d.entropy_b)
     << ", \"conditional_entropy\": " << json_number(d.conditional_entropy)
     << ", \"mutual_info_J\": " << json_number(d.mutual_info_J) << ", \"mutual_info_I\": " << json_number(d.mutual_info_I)
     << "},\n"
     << "  \"separability\": {\"w3\": " << json_number(v.w3) << ", \"w4\": " << json_number(v.w4)
     << ", \"min_ppt_eigenvalue\": " << json_number(v.min_ppt_eigenvalue) << ", \"classification\": \""
     << to_string(v.classification) << "\", \"agreement\": " << json_bool(v.agreement) << "},\n"
     << "  \"discordant_but_separable\": " << json_bool(r.discordant_but_separable) << "\n"
     << "}\n";
}

}  // namespace qclone
