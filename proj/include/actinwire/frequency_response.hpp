#pragma once

#include <cmath>
#include <vector>

#include "actinwire/errors.hpp"
#include "actinwire/monomer_circuit.hpp"

namespace actinwire {

/// Real poles of the overdamped channel, p1 < p2 < 0.
struct Poles {
  double p1_rad_s;  // large-magnitude pole
  double p2_rad_s;  // small-magnitude pole
};

/// Eq7Literal evaluates the transfer-function phase expression with a real
/// frequency argument, exactly as published (+45 deg at DC). StandardTwoPole
/// is the conventional phase of the transfer function at s = j*omega (0 deg
/// at DC, monotone to -180). Trend analyses use StandardTwoPole.
enum class PhaseMode { Eq7Literal, StandardTwoPole };

enum class DelayMethod { ClosedForm, FiniteDifference };

struct ResponsePoint {
  double freq_hz;
  double omega_rad_s;
  double atten_db;
  double phase_deg;
  double delay_s;
};

/// Roots of s^2 + s*R/L + 1/(LC). The pole magnitudes are separated by ~14
/// orders of magnitude at physical parameters, so the small root must come
/// from the product identity p1*p2 = 1/(LC); the subtractive quadratic
/// formula cancels almost all of its digits.
inline Poles compute_poles(const FilamentCircuit& c) {
  const double half_rate = c.R_eq_ohm / (2.0 * c.L_eq_H);
  const double inv_lc = 1.0 / (c.L_eq_H * c.C_eq_F);
  const double disc = half_rate * half_rate - inv_lc;
  if (!(disc > 0.0))
    throw model_error(
        "compute_poles: circuit is not overdamped, (R/2L)^2 <= 1/(LC); "
        "two real poles require (R/2L)^2 > 1/(LC)");
  const double p1 = -half_rate - std::sqrt(disc);
  const double p2 = inv_lc / p1;
  return {p1, p2};
}

/// Attenuation in dB at angular frequency omega. Factoring the published
/// three-term expression through the pole product 1/(LC) = |p1|*|p2| gives
///   A = -10*log10(1 + (w/p1)^2) - 10*log10(1 + (w/p2)^2),
/// which is exactly 0 at DC and free of the large-magnitude cancellation of
/// the literal form. Even in omega.
inline double attenuation_db(const FilamentCircuit& c, double omega_rad_s) {
  const Poles p = compute_poles(c);
  const double x1 = omega_rad_s / p.p1_rad_s;
  const double x2 = omega_rad_s / p.p2_rad_s;
  constexpr double k10OverLn10 = 4.342944819032518;
  // + 0.0 folds the DC result's negative zero into +0
  return -k10OverLn10 * (std::log1p(x1 * x1) + std::log1p(x2 * x2)) + 0.0;
}

namespace detail {

inline double phase_rad(const Poles& p, double omega, PhaseMode mode) {
  if (mode == PhaseMode::StandardTwoPole) {
    return -(std::atan(omega / std::fabs(p.p1_rad_s)) +
             std::atan(omega / std::fabs(p.p2_rad_s))) +
           0.0;
  }
  // Literal arctangent argument (1/LC)/((w-p1)(w-p2)); dividing through by
  // p1*p2 = 1/(LC) leaves 1/((1 - w/p1)(1 - w/p2)), exact at w = 0.
  const double a = 1.0 - omega / p.p1_rad_s;
  const double b = 1.0 - omega / p.p2_rad_s;
  return std::atan(1.0 / (a * b));
}

}  // namespace detail

inline double phase_deg(const FilamentCircuit& c, double omega_rad_s, PhaseMode mode) {
  constexpr double kDegPerRad = 180.0 / kPi;
  return kDegPerRad * detail::phase_rad(compute_poles(c), omega_rad_s, mode);
}

/// Group delay tau = -d(phase)/d(omega) in seconds, phase in radians.
/// ClosedForm is the analytic derivative of the StandardTwoPole phase:
///   tau = |p1|/(w^2 + p1^2) + |p2|/(w^2 + p2^2).
/// FiniteDifference uses a central difference on the selected phase mode;
/// fd_step_rad_s <= 0 selects the default step 1e-4 * max(|p2|, omega).
inline double group_delay_s(const FilamentCircuit& c, double omega_rad_s, PhaseMode mode,
                            DelayMethod method = DelayMethod::ClosedForm,
                            double fd_step_rad_s = 0.0) {
  const Poles p = compute_poles(c);
  if (method == DelayMethod::ClosedForm) {
    if (mode != PhaseMode::StandardTwoPole)
      throw parameter_error(
          "group_delay_s: ClosedForm is only defined for StandardTwoPole phase");
    const double a1 = std::fabs(p.p1_rad_s);
    const double a2 = std::fabs(p.p2_rad_s);
    return a1 / (omega_rad_s * omega_rad_s + a1 * a1) +
           a2 / (omega_rad_s * omega_rad_s + a2 * a2);
  }
  double h = fd_step_rad_s;
  if (!(h > 0.0)) h = 1e-4 * std::max(std::fabs(p.p2_rad_s), omega_rad_s);
  const double lo = detail::phase_rad(p, omega_rad_s - h, mode);
  const double hi = detail::phase_rad(p, omega_rad_s + h, mode);
  return -(hi - lo) / (2.0 * h);
}

/// Uniform inclusive frequency grid; delay uses the closed form in standard
/// mode and the default-step central difference in literal mode.
inline std::vector<ResponsePoint> sweep(const FilamentCircuit& c, double f_start_hz,
                                        double f_stop_hz, int n_points, PhaseMode mode) {
  if (!(f_start_hz >= 0.0) || !(f_stop_hz > f_start_hz))
    throw parameter_error("sweep: require 0 <= f_start_hz < f_stop_hz");
  if (n_points < 2) throw parameter_error("sweep: n_points must be >= 2");

  std::vector<ResponsePoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    double f;
    if (i == 0) {
      f = f_start_hz;
    } else if (i == n_points - 1) {
      f = f_stop_hz;
    } else {
      f = (f_start_hz * (n_points - 1 - i) + f_stop_hz * i) / (n_points - 1);
    }
    ResponsePoint pt;
    pt.freq_hz = f;
    pt.omega_rad_s = 2.0 * kPi * f;
    pt.atten_db = attenuation_db(c, pt.omega_rad_s);
    pt.phase_deg = phase_deg(c, pt.omega_rad_s, mode);
    pt.delay_s = mode == PhaseMode::StandardTwoPole
                     ? group_delay_s(c, pt.omega_rad_s, mode, DelayMethod::ClosedForm)
                     : group_delay_s(c, pt.omega_rad_s, mode, DelayMethod::FiniteDifference);
    out.push_back(pt);
  }
  return out;
}

}  // namespace actinwire
