#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "actinwire/charge_transport.hpp"
#include "actinwire/csv.hpp"
#include "actinwire/frequency_response.hpp"
#include "actinwire/monomer_circuit.hpp"

namespace actinwire {

// Throughput ceiling of the wireless FRET-based baseline network.
inline constexpr double kFretMamnetBps = 5.5e3;

namespace detail {

inline double time_grid_point(double t0, double t1, int n, int i) {
  if (i == 0) return t0;
  if (i == n - 1) return t1;
  return (t0 * (n - 1 - i) + t1 * i) / (n - 1);
}

}  // namespace detail

/// Frequency-response CSV for one filament, columns exactly:
/// freq_hz,omega_rad_s,atten_db,phase_deg,delay_s
inline std::string sweep_csv(const FilamentCircuit& c, double f_start_hz, double f_stop_hz,
                             int n_points, PhaseMode mode, std::string_view provenance) {
  std::string out(provenance);
  out += "freq_hz,omega_rad_s,atten_db,phase_deg,delay_s\n";
  for (const ResponsePoint& pt : sweep(c, f_start_hz, f_stop_hz, n_points, mode)) {
    out += csv::num(pt.freq_hz);
    out += ',';
    out += csv::num(pt.omega_rad_s);
    out += ',';
    out += csv::num(pt.atten_db);
    out += ',';
    out += csv::num(pt.phase_deg);
    out += ',';
    out += csv::num(pt.delay_s);
    out += '\n';
  }
  return out;
}

/// Throughput-versus-time CSV, columns: t_s,v_m_s,throughput_bps
inline std::string throughput_csv(const TransportParams& p, double t_start_s, double t_stop_s,
                                  int n_points, std::string_view provenance) {
  if (!(t_start_s >= 0.0) || !(t_stop_s > t_start_s))
    throw parameter_error("throughput: require 0 <= t_start_s < t_stop_s");
  if (n_points < 2) throw parameter_error("throughput: n_points must be >= 2");
  std::string out(provenance);
  out += "t_s,v_m_s,throughput_bps\n";
  for (int i = 0; i < n_points; ++i) {
    const double t = detail::time_grid_point(t_start_s, t_stop_s, n_points, i);
    const double v = velocity_m_s(t, p);
    out += csv::num(t);
    out += ',';
    out += csv::num(v);
    out += ',';
    out += csv::num(max_throughput_bps(t, p));
    out += '\n';
  }
  return out;
}

/// Side-by-side comparison against the FRET-based baseline with log10
/// columns for log-scale plotting. Zero throughput (past the velocity stop)
/// yields -inf in its log column.
inline std::string compare_fret_csv(const TransportParams& p, double t_start_s, double t_stop_s,
                                    int n_points, std::string_view provenance) {
  if (!(t_start_s >= 0.0) || !(t_stop_s > t_start_s))
    throw parameter_error("compare-fret: require 0 <= t_start_s < t_stop_s");
  if (n_points < 2) throw parameter_error("compare-fret: n_points must be >= 2");
  std::string out(provenance);
  out += "t_s,wannet_bps,fret_bps,ratio,log10_wannet_bps,log10_fret_bps\n";
  for (int i = 0; i < n_points; ++i) {
    const double t = detail::time_grid_point(t_start_s, t_stop_s, n_points, i);
    const double w = max_throughput_bps(t, p);
    out += csv::num(t);
    out += ',';
    out += csv::num(w);
    out += ',';
    out += csv::num(kFretMamnetBps);
    out += ',';
    out += csv::num(w / kFretMamnetBps);
    out += ',';
    out += csv::num(std::log10(w));
    out += ',';
    out += csv::num(std::log10(kFretMamnetBps));
    out += '\n';
  }
  return out;
}

/// Per-monomer components and per-um effective values in both aggregation
/// modes, with percent deviation from the published estimates.
inline std::string derive_components_csv(const PhysicalParams& p, double n_eff_per_um,
                                         std::string_view provenance) {
  const MonomerRLC m = monomer_rlc(p);
  std::string out(provenance);
  out += "quantity,mode,value,reference,deviation_pct\n";
  const auto row = [&out](const char* quantity, const char* mode, double value, double ref) {
    out += quantity;
    out += ',';
    out += mode;
    out += ',';
    out += csv::num(value);
    out += ',';
    out += csv::num(ref);
    out += ',';
    out += csv::num((value / ref - 1.0) * 100.0);
    out += '\n';
  };
  row("C0_F", "monomer", m.C0_F, kPaperC0_F);
  row("L0_H", "monomer", m.L0_H, kPaperL0_H);
  row("R0_ohm", "monomer", m.R0_ohm, kPaperR0_ohm);
  const FilamentCircuit derived =
      build_filament(p, 1.0, CircuitSource::DerivedFromMonomers, n_eff_per_um);
  row("R_eq_per_um_ohm", "derived", derived.R_eq_ohm, kPaperReqPerUm_ohm);
  row("L_eq_per_um_H", "derived", derived.L_eq_H, kPaperLeqPerUm_H);
  row("C_eq_per_um_F", "derived", derived.C_eq_F, kPaperCeqPerUm_F);
  const FilamentCircuit paper =
      build_filament(p, 1.0, CircuitSource::PaperEffectiveValues, n_eff_per_um);
  row("R_eq_per_um_ohm", "paper", paper.R_eq_ohm, kPaperReqPerUm_ohm);
  row("L_eq_per_um_H", "paper", paper.L_eq_H, kPaperLeqPerUm_H);
  row("C_eq_per_um_F", "paper", paper.C_eq_F, kPaperCeqPerUm_F);
  return out;
}

}  // namespace actinwire
