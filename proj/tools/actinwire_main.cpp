#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "actinwire/campaign.hpp"
#include "actinwire/config.hpp"
#include "actinwire/reports.hpp"
#include "actinwire/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace actinwire;

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw parameter_error("cannot create output directory '" + path.parent_path().string() + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw parameter_error("cannot open output file '" + path.string() + "'");
  out << content;
  if (!out) throw parameter_error("failed writing output file '" + path.string() + "'");
}

fs::path with_suffix(const fs::path& base, const std::string& suffix) {
  fs::path p = base;
  const std::string ext = p.extension().string();
  p.replace_extension();
  p += suffix;
  p += ext;
  return p;
}

unsigned campaign_threads(int n_seeds) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("ACTINWIRE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) throw parameter_error("ACTINWIRE_THREADS must be a positive integer");
    threads = static_cast<unsigned>(v);
  }
  if (threads > static_cast<unsigned>(n_seeds)) threads = static_cast<unsigned>(n_seeds);
  return threads;
}

std::string format_distance(double d) {
  std::string s = csv::num(d);
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

void cmd_derive_components(const EffectiveConfig& eff, const fs::path& out_path) {
  const std::string provenance = csv::provenance_line(config_hash_hex(eff));
  write_file(out_path, derive_components_csv(eff.physical, eff.n_eff_per_um, provenance));
  // Echo the effective configuration; feeding it back reproduces the report.
  std::cout << canonical_toml(eff);
}

void cmd_sweep(const EffectiveConfig& eff, const fs::path& out_path) {
  if (eff.sweep.distances_um.empty())
    throw parameter_error("sweep.distances_um must not be empty");
  const std::string provenance = csv::provenance_line(config_hash_hex(eff));
  for (const double d : eff.sweep.distances_um) {
    const FilamentCircuit c =
        build_filament(eff.physical, d, eff.circuit_mode, eff.n_eff_per_um);
    const std::string body = sweep_csv(c, eff.sweep.f_start_hz, eff.sweep.f_stop_hz,
                                       eff.sweep.n_points, eff.sweep.phase_mode, provenance);
    write_file(with_suffix(out_path, "_d" + format_distance(d) + "um"), body);
  }
}

void cmd_throughput(const EffectiveConfig& eff, const fs::path& out_path) {
  const std::string provenance = csv::provenance_line(config_hash_hex(eff));
  write_file(out_path, throughput_csv(eff.transport, eff.throughput.t_start_s,
                                      eff.throughput.t_stop_s, eff.throughput.n_points,
                                      provenance));
}

void cmd_compare_fret(const EffectiveConfig& eff, const fs::path& out_path) {
  const std::string provenance = csv::provenance_line(config_hash_hex(eff));
  write_file(out_path, compare_fret_csv(eff.transport, eff.throughput.t_start_s,
                                        eff.throughput.t_stop_s, eff.throughput.n_points,
                                        provenance));
}

void cmd_simulate(const EffectiveConfig& eff, const fs::path& out_path) {
  const std::string provenance = csv::provenance_line(config_hash_hex(eff));
  const unsigned threads = campaign_threads(eff.n_seeds);
  const std::vector<CampaignRun> runs = run_campaign(eff.scenario, eff.n_seeds, threads);
  write_file(out_path, metrics_csv(runs, provenance));
  write_file(with_suffix(out_path, "_timeline"), timeline_csv(runs, provenance));
  const CampaignSummary s = summarize(runs);
  write_file(with_suffix(out_path, "_summary"), summary_csv(s, provenance));
  std::cout << "campaign complete: seeds=" << s.n_seeds << " delivered=" << s.delivered
            << " delivery_rate=" << csv::num(s.delivery_rate)
            << " mean_delivery_time_s=" << csv::num(s.mean_delivery_time_s) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"actin-nanowire channel analysis and WANNET spreading simulation"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  std::string mode;
  std::string phase_mode;
  int seeds = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_path, "output CSV path")->required();
    sub->add_option("--overrides", overrides, "key=value overrides (section.key or bare key)");
    sub->add_option("--mode", mode, "circuit mode: paper|derived")
        ->check(CLI::IsMember({"paper", "derived"}));
    sub->add_option("--phase-mode", phase_mode, "phase mode: standard|literal")
        ->check(CLI::IsMember({"standard", "literal"}));
    sub->add_option("--seeds", seeds, "number of simulation seeds")->check(CLI::PositiveNumber);
  };

  CLI::App* sc_derive = app.add_subcommand(
      "derive-components", "per-monomer R/L/C and per-um effective values vs references");
  CLI::App* sc_sweep =
      app.add_subcommand("sweep", "frequency response CSVs, one file per filament length");
  CLI::App* sc_throughput = app.add_subcommand("throughput", "maximum throughput over time");
  CLI::App* sc_compare =
      app.add_subcommand("compare-fret", "throughput comparison against the FRET baseline");
  CLI::App* sc_simulate = app.add_subcommand("simulate", "WANNET spreading campaign over seeds");
  for (CLI::App* sub : {sc_derive, sc_sweep, sc_throughput, sc_compare, sc_simulate})
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "CONFIG_ERROR: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<std::string> all_overrides = overrides;
    if (!mode.empty()) all_overrides.push_back("physical.circuit_mode=" + mode);
    if (!phase_mode.empty()) all_overrides.push_back("sweep.phase_mode=" + phase_mode);
    if (seeds > 0) all_overrides.push_back("scenario.n_seeds=" + std::to_string(seeds));
    const EffectiveConfig eff = load_effective(config_path, all_overrides);

    if (sc_derive->parsed()) cmd_derive_components(eff, out_path);
    else if (sc_sweep->parsed()) cmd_sweep(eff, out_path);
    else if (sc_throughput->parsed()) cmd_throughput(eff, out_path);
    else if (sc_compare->parsed()) cmd_compare_fret(eff, out_path);
    else if (sc_simulate->parsed()) cmd_simulate(eff, out_path);
    return 0;
  } catch (const model_error& e) {
    std::cerr << "MODEL_ERROR: " << e.what() << "\n";
    return 3;
  } catch (const parameter_error& e) {
    std::cerr << "CONFIG_ERROR: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "CONFIG_ERROR: " << e.what() << "\n";
    return 2;
  }
}
