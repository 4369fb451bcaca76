#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "actinwire/csv.hpp"
#include "actinwire/wannet.hpp"

namespace actinwire {

struct CampaignRun {
  std::uint64_t seed;
  SimMetrics metrics;
};

/// Runs n_seeds independent simulations with seeds base.rng_seed + i. Work
/// is distributed over up to `threads` workers; results are stored by seed
/// index, so the output is identical for any thread count.
inline std::vector<CampaignRun> run_campaign(const ScenarioConfig& base, int n_seeds,
                                             unsigned threads) {
  if (n_seeds < 1) throw parameter_error("campaign: n_seeds must be >= 1");
  validate(base);
  if (threads < 1) threads = 1;
  if (threads > static_cast<unsigned>(n_seeds)) threads = static_cast<unsigned>(n_seeds);

  std::vector<CampaignRun> runs(static_cast<std::size_t>(n_seeds));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n_seeds) return;
      ScenarioConfig cfg = base;
      cfg.rng_seed = base.rng_seed + static_cast<std::uint64_t>(i);
      runs[static_cast<std::size_t>(i)] = {cfg.rng_seed, run_simulation(cfg)};
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return runs;
}

/// Per-seed metrics, columns:
/// seed,delivered,delivery_time_s,hops,wires_attempted,wires_established
/// (delivery_time_s is nan and hops 0 on undelivered runs)
inline std::string metrics_csv(const std::vector<CampaignRun>& runs, std::string_view provenance) {
  std::string out(provenance);
  out += "seed,delivered,delivery_time_s,hops,wires_attempted,wires_established\n";
  for (const CampaignRun& r : runs) {
    out += csv::num(r.seed);
    out += ',';
    out += r.metrics.delivered ? '1' : '0';
    out += ',';
    out += csv::num(r.metrics.delivery_time_s);
    out += ',';
    out += csv::num(r.metrics.hops_to_gateway);
    out += ',';
    out += csv::num(r.metrics.wires_attempted);
    out += ',';
    out += csv::num(r.metrics.wires_established);
    out += '\n';
  }
  return out;
}

/// Informed-fraction timelines, columns: seed,t_s,informed_fraction
inline std::string timeline_csv(const std::vector<CampaignRun>& runs, std::string_view provenance) {
  std::string out(provenance);
  out += "seed,t_s,informed_fraction\n";
  for (const CampaignRun& r : runs) {
    for (const TimelinePoint& pt : r.metrics.informed_fraction_timeline) {
      out += csv::num(r.seed);
      out += ',';
      out += csv::num(pt.t_s);
      out += ',';
      out += csv::num(pt.informed_fraction);
      out += '\n';
    }
  }
  return out;
}

struct CampaignSummary {
  int n_seeds = 0;
  int delivered = 0;
  double delivery_rate = 0.0;
  double mean_delivery_time_s = std::numeric_limits<double>::quiet_NaN();
  double stddev_delivery_time_s = std::numeric_limits<double>::quiet_NaN();
  double mean_hops = std::numeric_limits<double>::quiet_NaN();
  double stddev_hops = std::numeric_limits<double>::quiet_NaN();
};

/// Aggregates over delivered runs; stddev is the sample standard deviation.
inline CampaignSummary summarize(const std::vector<CampaignRun>& runs) {
  CampaignSummary s;
  s.n_seeds = static_cast<int>(runs.size());
  double sum_t = 0.0, sum_h = 0.0;
  for (const CampaignRun& r : runs) {
    if (!r.metrics.delivered) continue;
    ++s.delivered;
    sum_t += r.metrics.delivery_time_s;
    sum_h += r.metrics.hops_to_gateway;
  }
  s.delivery_rate = s.n_seeds > 0 ? static_cast<double>(s.delivered) / s.n_seeds : 0.0;
  if (s.delivered > 0) {
    s.mean_delivery_time_s = sum_t / s.delivered;
    s.mean_hops = sum_h / s.delivered;
    if (s.delivered > 1) {
      double var_t = 0.0, var_h = 0.0;
      for (const CampaignRun& r : runs) {
        if (!r.metrics.delivered) continue;
        const double dt = r.metrics.delivery_time_s - s.mean_delivery_time_s;
        const double dh = r.metrics.hops_to_gateway - s.mean_hops;
        var_t += dt * dt;
        var_h += dh * dh;
      }
      s.stddev_delivery_time_s = std::sqrt(var_t / (s.delivered - 1));
      s.stddev_hops = std::sqrt(var_h / (s.delivered - 1));
    }
  }
  return s;
}

inline std::string summary_csv(const CampaignSummary& s, std::string_view provenance) {
  std::string out(provenance);
  out +=
      "n_seeds,delivered,delivery_rate,mean_delivery_time_s,stddev_delivery_time_s,"
      "mean_hops,stddev_hops\n";
  out += csv::num(s.n_seeds);
  out += ',';
  out += csv::num(s.delivered);
  out += ',';
  out += csv::num(s.delivery_rate);
  out += ',';
  out += csv::num(s.mean_delivery_time_s);
  out += ',';
  out += csv::num(s.stddev_delivery_time_s);
  out += ',';
  out += csv::num(s.mean_hops);
  out += ',';
  out += csv::num(s.stddev_hops);
  out += '\n';
  return out;
}

}  // namespace actinwire
