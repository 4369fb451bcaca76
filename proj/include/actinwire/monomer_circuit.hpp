#pragma once

#include <cmath>
#include <string>

#include "actinwire/constants.hpp"
#include "actinwire/errors.hpp"

namespace actinwire {

/// Geometric and electrical constants of an actin monomer and its ionic
/// medium. The defaults reproduce the published per-monomer component
/// estimates (~96e-6 pF, ~1.7 pH, ~6.11 MOhm): lambda_B, l_monomer and
/// temperature are literature values, while r_actin, epsilon_r, rho and
/// H_turns are fitted so the closed forms land on those estimates.
struct PhysicalParams {
  double r_actin_m = 2.5e-9;     // filament radius
  double lambda_B_m = 7.13e-10;  // Bjerrum length (293 K)
  double epsilon_r = 80.0;       // relative permittivity of the medium
  double mu_r = 1.0;             // relative permeability
  double rho_ohm_m = 0.826;      // ionic resistivity
  double l_monomer_m = 5.4e-9;   // monomer length
  double H_turns = 15.0;         // helical turns
  double temperature_K = 293.0;  // documents the Bjerrum-length provenance
};

inline void validate(const PhysicalParams& p) {
  if (!(p.r_actin_m > 0.0) || !std::isfinite(p.r_actin_m))
    throw parameter_error("physical.r_actin_m must be > 0");
  if (!(p.lambda_B_m > 0.0) || !std::isfinite(p.lambda_B_m))
    throw parameter_error("physical.lambda_B_m must be > 0");
  if (!(p.epsilon_r >= 1.0) || !std::isfinite(p.epsilon_r))
    throw parameter_error("physical.epsilon_r must be >= 1");
  if (!(p.mu_r > 0.0) || !std::isfinite(p.mu_r))
    throw parameter_error("physical.mu_r must be > 0");
  if (!(p.rho_ohm_m > 0.0) || !std::isfinite(p.rho_ohm_m))
    throw parameter_error("physical.rho_ohm_m must be > 0");
  if (!(p.l_monomer_m > 0.0) || !std::isfinite(p.l_monomer_m))
    throw parameter_error("physical.l_monomer_m must be > 0");
  if (!(p.H_turns >= 1.0) || !std::isfinite(p.H_turns))
    throw parameter_error("physical.H_turns must be >= 1");
  if (!(p.temperature_K > 0.0) || !std::isfinite(p.temperature_K))
    throw parameter_error("physical.temperature_K must be > 0");
}

/// Per-monomer lumped components.
struct MonomerRLC {
  double C0_F;
  double L0_H;
  double R0_ohm;
};

// Published reference values the fitted defaults are checked against.
inline constexpr double kPaperC0_F = 96e-6 * 1e-12;  // 96e-6 pF
inline constexpr double kPaperL0_H = 1.7e-12;
inline constexpr double kPaperR0_ohm = 6.11e6;

// Published effective per-micrometer values of the aggregated filament.
inline constexpr double kPaperReqPerUm_ohm = 1.2e9;
inline constexpr double kPaperLeqPerUm_H = 340e-12;
inline constexpr double kPaperCeqPerUm_F = 0.02e-12;

enum class CircuitSource { DerivedFromMonomers, PaperEffectiveValues };

/// Lumped series-equivalent circuit of a filament of given length.
/// Valid circuits are overdamped: (R/2L)^2 > 1/(LC).
struct FilamentCircuit {
  double length_um = 0.0;
  double R_eq_ohm = 0.0;
  double L_eq_H = 0.0;
  double C_eq_F = 0.0;
  CircuitSource source = CircuitSource::PaperEffectiveValues;
};

inline bool is_overdamped(const FilamentCircuit& c) {
  const double half_rate = c.R_eq_ohm / (2.0 * c.L_eq_H);
  return half_rate * half_rate > 1.0 / (c.L_eq_H * c.C_eq_F);
}

/// Depletion-shell capacitance of one monomer:
///   C0 = 2*pi*eps * l / ln((r + lambda_B) / r)
inline double monomer_capacitance(const PhysicalParams& p) {
  validate(p);
  const double eps = p.epsilon_r * kVacuumPermittivity;
  const double c = 2.0 * kPi * eps * p.l_monomer_m /
                   std::log((p.r_actin_m + p.lambda_B_m) / p.r_actin_m);
  if (!std::isfinite(c) || c <= 0.0)
    throw parameter_error("monomer_capacitance: result is not a positive finite value");
  return c;
}

/// Helical inductance of one monomer:
///   L0 = mu * H^2 * A / l,  A = pi*(r + lambda_B)^2
inline double monomer_inductance(const PhysicalParams& p) {
  validate(p);
  const double mu = p.mu_r * kVacuumPermeability;
  const double shell = p.r_actin_m + p.lambda_B_m;
  const double area = kPi * shell * shell;
  const double l = mu * p.H_turns * p.H_turns * area / p.l_monomer_m;
  if (!std::isfinite(l) || l <= 0.0)
    throw parameter_error("monomer_inductance: result is not a positive finite value");
  return l;
}

/// Ionic-solution resistance of one monomer:
///   R0 = rho * ln((r + lambda_B) / r) / (2*pi*l)
inline double monomer_resistance(const PhysicalParams& p) {
  validate(p);
  const double r = p.rho_ohm_m * std::log((p.r_actin_m + p.lambda_B_m) / p.r_actin_m) /
                   (2.0 * kPi * p.l_monomer_m);
  if (!std::isfinite(r) || r <= 0.0)
    throw parameter_error("monomer_resistance: result is not a positive finite value");
  return r;
}

inline MonomerRLC monomer_rlc(const PhysicalParams& p) {
  return {monomer_capacitance(p), monomer_inductance(p), monomer_resistance(p)};
}

/// Aggregates monomer circuits into the filament equivalent. R and L sum in
/// series; capacitance also aggregates additively (the published effective
/// C_eq grows with monomer count, i.e. the shells combine in parallel).
///
/// PaperEffectiveValues scales the published per-um values and ignores the
/// physical parameters. DerivedFromMonomers uses n_eff_per_um * length
/// monomer circuits; n_eff_per_um = 200 matches the published effective
/// values to within a few percent.
inline FilamentCircuit build_filament(const PhysicalParams& p, double length_um,
                                      CircuitSource mode, double n_eff_per_um = 200.0) {
  if (!(length_um > 0.0) || !std::isfinite(length_um))
    throw parameter_error("build_filament: length_um must be > 0");
  FilamentCircuit c;
  c.length_um = length_um;
  c.source = mode;
  if (mode == CircuitSource::PaperEffectiveValues) {
    c.R_eq_ohm = kPaperReqPerUm_ohm * length_um;
    c.L_eq_H = kPaperLeqPerUm_H * length_um;
    c.C_eq_F = kPaperCeqPerUm_F * length_um;
  } else {
    if (!(n_eff_per_um > 0.0) || !std::isfinite(n_eff_per_um))
      throw parameter_error("build_filament: n_eff_per_um must be > 0");
    const MonomerRLC m = monomer_rlc(p);
    const double n = n_eff_per_um * length_um;
    c.R_eq_ohm = n * m.R0_ohm;
    c.L_eq_H = n * m.L0_H;
    c.C_eq_F = n * m.C0_F;
  }
  if (!is_overdamped(c))
    throw model_error("build_filament: circuit is not overdamped, (R/2L)^2 <= 1/(LC)");
  return c;
}

}  // namespace actinwire
