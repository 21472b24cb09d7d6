#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeconv/errors.hpp"
#include "freeconv/hausdorff.hpp"
#include "freeconv/io.hpp"
#include "freeconv/laws.hpp"
#include "freeconv/measure.hpp"
#include "freeconv/support.hpp"
#include "freeconv/verify.hpp"

namespace {

using freeconv::errc;
using freeconv::fail;

struct MeasureSource {
  std::string law;
  std::string file;
  int law_grid_n = 2001;
  bool renormalize = false;

  freeconv::MeasureSpec load() const {
    if (!law.empty() && !file.empty()) fail(errc::bad_config, "use either --law or --file");
    if (!law.empty()) return freeconv::law_to_spec(freeconv::parse_law(law), law_grid_n);
    if (!file.empty()) return freeconv::read_measure_file(file, renormalize);
    fail(errc::bad_config, "a measure is required (--law or --file)");
  }
};

struct OutputTarget {
  std::string path;
  std::string format = "json";

  void emit(const std::string& content) const {
    if (path.empty())
      std::cout << content;
    else
      freeconv::atomic_write(path, content);
  }
};

void add_measure_flags(CLI::App* cmd, MeasureSource& src) {
  cmd->add_option("--law", src.law,
                  "named law: semicircle[:var], bernoulli, free_poisson:<lambda>, arcsine[:radius]");
  cmd->add_option("--file", src.file, "measure spec JSON file");
  cmd->add_option("--law-grid-n", src.law_grid_n, "breakpoints for law discretization")
      ->check(CLI::Range(64, 100000));
  cmd->add_flag("--renormalize", src.renormalize, "rescale density of --file specs to mass 1");
}

void add_output_flags(CLI::App* cmd, OutputTarget& out) {
  cmd->add_option("--out", out.path, "output path (atomic write); stdout when omitted");
  cmd->add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_grid_flags(CLI::App* cmd, freeconv::SnapshotOptions& opt) {
  cmd->add_option("--grid-n", opt.grid_n, "V_t+ scan grid points")->check(CLI::Range(64, 1 << 20));
  cmd->add_option("--samples-n", opt.samples_n, "boundary samples per component")
      ->check(CLI::Range(3, 1 << 20));
  cmd->add_option("--y-floor", opt.y_floor, "lower evaluation height")
      ->check(CLI::Range(1e-14, 1e-3));
}

std::pair<double, double> parse_t_range(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) fail(errc::bad_config, "scan needs --t lo:hi");
  try {
    return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 1))};
  } catch (const std::exception&) {
    fail(errc::bad_config, "cannot parse t range '" + s + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"free additive convolution semigroup: supports, densities, continuity scans"};
  app.require_subcommand(1);

  MeasureSource src;
  OutputTarget out;
  freeconv::SnapshotOptions opt;
  double t_value = 2.0;
  std::string t_range;
  int steps = 21;
  int refine_depth = 3;
  std::uint64_t seed = 12345;
  std::vector<std::string> snap_files;

  auto* snap_cmd = app.add_subcommand("snapshot", "support, atoms and density of mu_t at one t");
  add_measure_flags(snap_cmd, src);
  add_output_flags(snap_cmd, out);
  add_grid_flags(snap_cmd, opt);
  snap_cmd->add_option("--t", t_value, "time parameter, t > 1")->required();

  auto* dens_cmd = app.add_subcommand("density", "density profile (u, p) of mu_t at one t");
  add_measure_flags(dens_cmd, src);
  add_output_flags(dens_cmd, out);
  add_grid_flags(dens_cmd, opt);
  dens_cmd->add_option("--t", t_value, "time parameter, t > 1")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Hausdorff continuity scan over a t range");
  add_measure_flags(scan_cmd, src);
  add_output_flags(scan_cmd, out);
  add_grid_flags(scan_cmd, opt);
  scan_cmd->add_option("--t", t_range, "time range lo:hi with 1 < lo < hi")->required();
  scan_cmd->add_option("--steps", steps, "grid steps, >= 2");
  scan_cmd->add_option("--refine-depth", refine_depth, "refinement rounds around jumps")
      ->check(CLI::Range(0, 12));

  auto* haus_cmd = app.add_subcommand("hausdorff", "distance between two snapshot files");
  haus_cmd->add_option("files", snap_files, "two snapshot JSON files")->expected(2);

  auto* verify_cmd = app.add_subcommand("verify", "run the property suite against a measure");
  add_measure_flags(verify_cmd, src);
  add_output_flags(verify_cmd, out);
  verify_cmd->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (snap_cmd->parsed()) {
    const auto spec = src.load();
    const auto snap = freeconv::snapshot(spec, freeconv::TimeParam(t_value), opt);
    if (out.format == "csv") fail(errc::bad_config, "snapshot output is JSON only");
    out.emit(freeconv::snapshot_to_json(snap).dump(2) + "\n");
    return 0;
  }

  if (dens_cmd->parsed()) {
    const auto spec = src.load();
    const auto snap = freeconv::snapshot(spec, freeconv::TimeParam(t_value), opt);
    out.emit(out.format == "csv" ? freeconv::profile_to_csv(snap)
                                 : freeconv::profile_to_json(snap).dump(2) + "\n");
    return 0;
  }

  if (scan_cmd->parsed()) {
    const auto spec = src.load();
    const auto [lo, hi] = parse_t_range(t_range);
    const auto table = freeconv::continuity_scan(spec, lo, hi, steps, refine_depth, opt);
    out.emit(out.format == "csv" ? freeconv::table_to_csv(table)
                                 : freeconv::table_to_json(table).dump(2) + "\n");
    return 0;
  }

  if (haus_cmd->parsed()) {
    const auto a = freeconv::read_snapshot_file(snap_files[0]);
    const auto b = freeconv::read_snapshot_file(snap_files[1]);
    const double d = freeconv::hausdorff(full_support(a), full_support(b));
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g\n", d);
    out.emit(buf);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const auto spec = src.load();
    const auto results = freeconv::run_property_suite(spec, seed);
    if (out.format == "csv") fail(errc::bad_config, "verify output is json or plain text");
    if (!out.path.empty()) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : results)
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      out.emit(j.dump(2) + "\n");
    } else {
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
      }
    }
    return freeconv::all_pass(results) ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const freeconv::Error& e) {
    std::cerr << e.code_name() << ": " << e.what() << "\n";
    return e.is_numeric() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
