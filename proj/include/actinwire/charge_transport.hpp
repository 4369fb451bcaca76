#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "actinwire/errors.hpp"

namespace actinwire {

/// Charge-propagation velocity model. mu1 and mu2 are the ratio forms of the
/// longitudinal/radial ionic-flow resistances (6*R1/R and 24*R2/R); only the
/// ratios are recoverable, so they are parameters. alpha_s and beta_m set the
/// velocity scale and are fitted so v(0) ~ 0.03 m/s and the throughput knee
/// sits near 23 Mbps at 30 us with the default mu values.
///
/// mu2 = 0 is the constant-rate override: eta' stays frozen at its t = 0
/// value 4*Omega^2, so the velocity never decays. Used for calibration
/// checks.
struct TransportParams {
  double Omega = 2.3810;            // input-voltage factor
  double mu1 = 10.0;
  double mu2 = 1.0;
  double alpha_s = 7.0e-7;          // timescale
  double beta_m = 1.08e-8;          // 2 * l_monomer
  double charge_per_monomer = 4.0;  // elementary charges
  double monomers_per_um = 370.0;
  std::optional<double> t_stop_s = 60e-6;  // hard velocity stop; nullopt disables
};

inline void validate(const TransportParams& p) {
  if (!(p.Omega > 0.0) || !std::isfinite(p.Omega))
    throw parameter_error("transport.Omega must be > 0");
  if (!(p.mu1 >= 0.0) || !std::isfinite(p.mu1))
    throw parameter_error("transport.mu1 must be >= 0");
  if (!(p.mu2 >= 0.0) || !std::isfinite(p.mu2))
    throw parameter_error("transport.mu2 must be >= 0");
  if (!(p.alpha_s > 0.0) || !std::isfinite(p.alpha_s))
    throw parameter_error("transport.alpha_s must be > 0");
  if (!(p.beta_m > 0.0) || !std::isfinite(p.beta_m))
    throw parameter_error("transport.beta_m must be > 0");
  if (!(p.charge_per_monomer > 0.0) || !std::isfinite(p.charge_per_monomer))
    throw parameter_error("transport.charge_per_monomer must be > 0");
  if (!(p.monomers_per_um > 0.0) || !std::isfinite(p.monomers_per_um))
    throw parameter_error("transport.monomers_per_um must be > 0");
  if (p.t_stop_s && (!(*p.t_stop_s > 0.0) || !std::isfinite(*p.t_stop_s)))
    throw parameter_error("transport.t_stop_s must be > 0 when set (0 disables)");
}

struct ThroughputPoint {
  double t_s;
  double v_m_s;
  double throughput_bps;
};

/// d(eta)/d(tau) = 4*Omega^2 * exp(-4*tau*mu2/3)
///                 / (1 + (4*mu1*Omega^2 / (5*mu2)) * (1 - exp(-4*tau*mu2/3)))
inline double eta_prime(double tau, const TransportParams& p) {
  if (!(tau >= 0.0)) throw parameter_error("eta_prime: tau must be >= 0");
  const double om2 = p.Omega * p.Omega;
  if (p.mu2 == 0.0) return 4.0 * om2;  // frozen override
  const double x = 4.0 * tau * p.mu2 / 3.0;
  const double decay = std::exp(-x);
  const double one_minus_decay = -std::expm1(-x);
  return 4.0 * om2 * decay / (1.0 + (4.0 * p.mu1 * om2 / (5.0 * p.mu2)) * one_minus_decay);
}

namespace detail {

inline double velocity_unclamped_m_s(double t_s, const TransportParams& p) {
  const double tau = t_s / (24.0 * p.alpha_s);
  return (p.beta_m / p.alpha_s) * (1.0 + eta_prime(tau, p) / 24.0);
}

}  // namespace detail

/// v(t) = beta/alpha * (1 + eta'(tau)/24) with tau = t/(24*alpha); zero once
/// the optional hard stop t_stop_s is reached.
inline double velocity_m_s(double t_s, const TransportParams& p) {
  if (!(t_s >= 0.0)) throw parameter_error("velocity_m_s: t must be >= 0");
  if (p.t_stop_s && t_s >= *p.t_stop_s) return 0.0;
  return detail::velocity_unclamped_m_s(t_s, p);
}

/// In-flight charge capacity of a filament, one electron = one bit.
inline double charge_capacity_bits(double length_um, const TransportParams& p) {
  if (!(length_um > 0.0)) throw parameter_error("charge_capacity_bits: length_um must be > 0");
  return p.charge_per_monomer * p.monomers_per_um * length_um;
}

/// Instantaneous maximum throughput: velocity in um/s times the per-um
/// charge capacity.
inline double max_throughput_bps(double t_s, const TransportParams& p) {
  return velocity_m_s(t_s, p) * 1e6 * charge_capacity_bits(1.0, p);
}

namespace detail {

// Adaptive Simpson with an absolute tolerance budget.
template <typename F>
double simpson_rec(const F& f, double a, double fa, double b, double fb, double m, double fm,
                   double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol, 48);
}

}  // namespace detail

/// Smallest T with integral_0^T max_throughput(t) dt >= message_bits, or
/// nullopt when the filament saturates below message_bits before t_stop.
/// Adaptive integration at the given relative tolerance; past the decay knee
/// the velocity has converged to its beta/alpha floor and the integral is
/// continued analytically at the plateau rate.
inline std::optional<double> transmission_time_s(double message_bits, const TransportParams& p,
                                                 double rel_tol = 1e-6) {
  if (!(message_bits >= 1.0)) throw parameter_error("transmission_time_s: message_bits must be >= 1");
  if (!(rel_tol > 0.0)) throw parameter_error("transmission_time_s: rel_tol must be > 0");
  validate(p);

  // Unclamped rate: the integration range never crosses t_stop, and the
  // clamp would otherwise plant a step discontinuity at the endpoint.
  const auto rate = [&p](double t) {
    return detail::velocity_unclamped_m_s(t, p) * 1e6 * charge_capacity_bits(1.0, p);
  };

  // exp(-4*tau*mu2/3) < 1e-20 beyond tau_knee: eta' is numerically zero.
  const double t_knee = p.mu2 > 0.0
                            ? 24.0 * p.alpha_s * (3.0 / (4.0 * p.mu2)) * 46.05
                            : std::numeric_limits<double>::infinity();
  const double plateau_rate =
      (p.beta_m / p.alpha_s) * 1e6 * charge_capacity_bits(1.0, p);

  const auto cumulative = [&](double T) {
    double Tc = T;
    if (p.t_stop_s && Tc > *p.t_stop_s) Tc = *p.t_stop_s;
    if (Tc <= t_knee)
      return detail::adaptive_simpson(rate, 0.0, Tc, rel_tol * message_bits);
    return detail::adaptive_simpson(rate, 0.0, t_knee, rel_tol * message_bits) +
           plateau_rate * (Tc - t_knee);
  };

  double hi;
  if (p.t_stop_s) {
    hi = *p.t_stop_s;
    if (cumulative(hi) < message_bits) return std::nullopt;
  } else {
    hi = message_bits / rate(0.0);
    while (cumulative(hi) < message_bits) hi *= 2.0;
  }

  double lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cumulative(mid) >= message_bits)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace actinwire
