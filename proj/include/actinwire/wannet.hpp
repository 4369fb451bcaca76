#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "actinwire/charge_transport.hpp"
#include "actinwire/errors.hpp"
#include "actinwire/frequency_response.hpp"
#include "actinwire/monomer_circuit.hpp"

namespace actinwire {

enum class NodeState { Idle, Growing, Linked, Informed };

struct Node {
  int id = 0;
  double x_um = 0.0;
  double y_um = 0.0;
  double z_um = 0.0;
  double radius_um = 1.0;
  bool is_gateway = false;
  bool initial_detector = false;
  NodeState state = NodeState::Idle;
};

/// RandomNeighborEpidemic lets a wire capture any node including the one
/// that informed the grower; RandomExcludingSource (default) removes the
/// informing node from the grower's candidate set.
enum class RelayPolicy { RandomNeighborEpidemic, RandomExcludingSource };

/// How per-hop electrical latency is derived from the realized wire length.
struct ChannelModel {
  PhysicalParams physical{};
  CircuitSource mode = CircuitSource::PaperEffectiveValues;
  double n_eff_per_um = 200.0;
};

struct ScenarioConfig {
  std::vector<Node> nodes;
  int dimension = 2;  // 2 or 3
  double wire_growth_um_s = 1.0;  // polymerization-order default, not a source value
  double wire_max_length_um = 12.0;
  double miss_timeout_s = 0.5;
  double disassembly_s = 0.5;
  std::int64_t message_bits = 1000;
  std::int64_t per_hop_overhead_bits = 16;
  RelayPolicy relay_policy = RelayPolicy::RandomExcludingSource;
  std::uint64_t rng_seed = 0;
  double max_sim_time_s = 1e5;
  std::optional<double> fixed_hop_delay_s{};  // overrides the DC group delay when set
  ChannelModel channel{};
  TransportParams transport{};
};

inline void validate(const ScenarioConfig& cfg) {
  if (cfg.nodes.empty()) throw parameter_error("scenario: at least one node is required");
  for (std::size_t i = 0; i < cfg.nodes.size(); ++i) {
    if (!(cfg.nodes[i].radius_um > 0.0))
      throw parameter_error("scenario.nodes: radius_um must be > 0 (node id " +
                            std::to_string(cfg.nodes[i].id) + ")");
    for (std::size_t j = i + 1; j < cfg.nodes.size(); ++j)
      if (cfg.nodes[i].id == cfg.nodes[j].id)
        throw parameter_error("scenario.nodes: duplicate node id " +
                              std::to_string(cfg.nodes[i].id));
  }
  if (cfg.dimension != 2 && cfg.dimension != 3)
    throw parameter_error("scenario.dimension must be 2 or 3");
  if (!(cfg.wire_growth_um_s > 0.0))
    throw parameter_error("scenario.wire_growth_um_s must be > 0");
  if (!(cfg.wire_max_length_um > 0.0) || cfg.wire_max_length_um > 100.0)
    throw parameter_error("scenario.wire_max_length_um must be in (0, 100]");
  if (!(cfg.miss_timeout_s > 0.0)) throw parameter_error("scenario.miss_timeout_s must be > 0");
  if (!(cfg.disassembly_s > 0.0)) throw parameter_error("scenario.disassembly_s must be > 0");
  if (cfg.message_bits < 1) throw parameter_error("scenario.message_bits must be >= 1");
  if (cfg.per_hop_overhead_bits < 0)
    throw parameter_error("scenario.per_hop_overhead_bits must be >= 0");
  if (!(cfg.max_sim_time_s > 0.0)) throw parameter_error("scenario.max_sim_time_s must be > 0");
  if (cfg.fixed_hop_delay_s && !(*cfg.fixed_hop_delay_s >= 0.0))
    throw parameter_error("scenario.fixed_hop_delay_s must be >= 0 when set");
  bool any_detector = false;
  for (const Node& n : cfg.nodes) any_detector |= n.initial_detector;
  if (!any_detector)
    throw parameter_error("scenario: at least one node must have initial_detector = true");
  validate(cfg.channel.physical);
  validate(cfg.transport);
}

struct TimelinePoint {
  double t_s;
  double informed_fraction;
};

/// One entry per first infection; the components reconstruct the hop:
/// informed_at = attempt_start + growth + channel_delay + tx.
struct HopRecord {
  int from_id;
  int to_id;
  double attempt_start_s;
  double growth_s;
  double channel_delay_s;
  double tx_s;
  double informed_at_s;
};

struct SimMetrics {
  bool delivered = false;
  double delivery_time_s = std::numeric_limits<double>::quiet_NaN();
  int hops_to_gateway = 0;
  std::int64_t wires_attempted = 0;
  std::int64_t wires_established = 0;
  std::vector<TimelinePoint> informed_fraction_timeline;
  std::vector<HopRecord> infection_log;
};

namespace detail {

inline double node_distance_um(const Node& a, const Node& b, int dimension) {
  const double dx = b.x_um - a.x_um;
  const double dy = b.y_um - a.y_um;
  const double dz = dimension == 3 ? b.z_um - a.z_um : 0.0;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// One raw engine draw -> uniform double in [0, 1). Spelled out so the draw
// schedule is fixed: one draw per 2D direction sample, two per 3D sample.
inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Probability that a wire grown in a uniformly random direction from
/// `source` passes within radius of the target centre. Overlapping nodes
/// (D <= r) capture with certainty; targets beyond reach
/// (D > wire_max_length_um + r) never capture. In between:
///   2D: asin(r/D) / pi        3D: (1 - cos(asin(r/D))) / 2
inline double hit_probability(const Node& source, const Node& target, int dimension,
                              double wire_max_length_um) {
  if (dimension != 2 && dimension != 3)
    throw parameter_error("hit_probability: dimension must be 2 or 3");
  const double d = detail::node_distance_um(source, target, dimension);
  const double r = target.radius_um;
  if (d <= r) return 1.0;
  if (d > wire_max_length_um + r) return 0.0;
  const double x = r / d;
  if (dimension == 2) return std::asin(x) / kPi;
  // cancellation-free form of (1 - sqrt(1 - x^2)) / 2
  return x * x / (2.0 * (1.0 + std::sqrt((1.0 - x) * (1.0 + x))));
}

struct GrowthOutcome {
  std::optional<std::size_t> hit_index;  // index into the candidate span
  double wire_length_um = 0.0;           // valid on hit
  double elapsed_s = 0.0;                // growth time on hit, timeout + disassembly on miss
};

/// Samples one uniform growth direction (one RNG draw in 2D, two in 3D,
/// consumed whether or not anything is hit) and resolves the nearest
/// candidate whose perpendicular distance from the ray is within its radius
/// and whose along-ray capture distance is within wire_max_length_um. The
/// wire length is the along-ray distance to the captured node's centre
/// plane; a candidate overlapping the source captures regardless of
/// direction at the centre distance.
inline GrowthOutcome grow_wire(const Node& source, std::span<const Node> candidates,
                               std::mt19937_64& rng, const ScenarioConfig& cfg) {
  double ux, uy, uz;
  if (cfg.dimension == 2) {
    const double theta = 2.0 * kPi * detail::uniform01(rng);
    ux = std::cos(theta);
    uy = std::sin(theta);
    uz = 0.0;
  } else {
    const double z = 2.0 * detail::uniform01(rng) - 1.0;
    const double phi = 2.0 * kPi * detail::uniform01(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    ux = s * std::cos(phi);
    uy = s * std::sin(phi);
    uz = z;
  }

  GrowthOutcome out;
  double best_len = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Node& cand = candidates[i];
    const double dx = cand.x_um - source.x_um;
    const double dy = cand.y_um - source.y_um;
    const double dz = cfg.dimension == 3 ? cand.z_um - source.z_um : 0.0;
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    double len;
    if (dist <= cand.radius_um) {
      len = dist;  // overlap: captured regardless of direction
    } else {
      const double proj = dx * ux + dy * uy + dz * uz;
      if (proj <= 0.0) continue;
      const double px = dx - proj * ux;
      const double py = dy - proj * uy;
      const double pz = dz - proj * uz;
      if (px * px + py * py + pz * pz > cand.radius_um * cand.radius_um) continue;
      if (proj > cfg.wire_max_length_um) continue;
      len = proj;
    }
    if (len < best_len) {
      best_len = len;
      out.hit_index = i;
    }
  }

  if (out.hit_index) {
    out.wire_length_um = best_len;
    out.elapsed_s = best_len / cfg.wire_growth_um_s;
  } else {
    out.elapsed_s = cfg.miss_timeout_s + cfg.disassembly_s;
  }
  return out;
}

namespace detail {

struct SimEvent {
  double time;
  std::uint64_t seq;  // tie-breaker: strict deterministic ordering
  enum class Kind { Attempt, Delivery } kind;
  int node;    // attempting node / sender
  int target;  // Delivery only
  double attempt_start, growth_s, channel_delay_s;
};

struct SimEventLater {
  bool operator()(const SimEvent& a, const SimEvent& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

}  // namespace detail

/// Event-driven spreading simulation. Every informed non-gateway node
/// repeatedly grows wires: a miss costs miss_timeout + disassembly and the
/// node retries with a fresh random direction; a hit transmits the message
/// (growth + DC group delay of the realized wire + transmission time), after
/// which the sender disassembles and starts over. A node joins the relay on
/// its first infection only. The run ends at the first gateway delivery or
/// at max_sim_time_s. Deterministic for a given rng_seed.
inline SimMetrics run_simulation(const ScenarioConfig& cfg) {
  validate(cfg);
  const auto& nodes = cfg.nodes;
  const int n = static_cast<int>(nodes.size());

  // Per-hop transmission time is length-independent; compute it once.
  const double hop_bits = static_cast<double>(cfg.message_bits + cfg.per_hop_overhead_bits);
  const auto tx_opt = transmission_time_s(hop_bits, cfg.transport);
  if (!tx_opt)
    throw model_error("run_simulation: message of " +
                      std::to_string(cfg.message_bits + cfg.per_hop_overhead_bits) +
                      " bits exceeds the filament charge capacity before t_stop");
  const double tx_s = *tx_opt;

  const auto channel_delay_s = [&cfg](double length_um) {
    if (cfg.fixed_hop_delay_s) return *cfg.fixed_hop_delay_s;
    const FilamentCircuit fc = build_filament(cfg.channel.physical, length_um,
                                              cfg.channel.mode, cfg.channel.n_eff_per_um);
    return group_delay_s(fc, 0.0, PhaseMode::StandardTwoPole, DelayMethod::ClosedForm);
  };

  SimMetrics m;
  std::vector<bool> informed(n, false);
  std::vector<int> depth(n, 0);
  std::vector<int> infector(n, -1);
  std::vector<std::vector<Node>> candidates(n);  // built lazily; fixed per node once informed
  int informed_count = 0;

  const auto fraction = [&] { return static_cast<double>(informed_count) / n; };

  std::mt19937_64 rng(cfg.rng_seed);
  std::priority_queue<detail::SimEvent, std::vector<detail::SimEvent>, detail::SimEventLater> q;
  std::uint64_t seq = 0;

  const auto push_attempt = [&](double t, int node) {
    q.push({t, seq++, detail::SimEvent::Kind::Attempt, node, -1, 0.0, 0.0, 0.0});
  };

  for (int i = 0; i < n; ++i) {
    if (nodes[i].initial_detector) {
      informed[i] = true;
      ++informed_count;
    }
  }
  m.informed_fraction_timeline.push_back({0.0, fraction()});

  for (int i = 0; i < n; ++i) {
    if (informed[i] && nodes[i].is_gateway) {
      m.delivered = true;
      m.delivery_time_s = 0.0;
      m.hops_to_gateway = 0;
      return m;
    }
  }
  for (int i = 0; i < n; ++i)
    if (informed[i]) push_attempt(0.0, i);

  while (!q.empty()) {
    const detail::SimEvent ev = q.top();
    q.pop();
    if (ev.time > cfg.max_sim_time_s) break;

    if (ev.kind == detail::SimEvent::Kind::Attempt) {
      const int src = ev.node;
      auto& cand = candidates[src];
      if (cand.empty()) {
        for (int j = 0; j < n; ++j) {
          if (j == src) continue;
          if (cfg.relay_policy == RelayPolicy::RandomExcludingSource && j == infector[src])
            continue;
          cand.push_back(nodes[j]);
        }
      }
      ++m.wires_attempted;
      const GrowthOutcome g = grow_wire(nodes[src], cand, rng, cfg);
      if (!g.hit_index) {
        push_attempt(ev.time + g.elapsed_s, src);
        continue;
      }
      ++m.wires_established;
      const int tgt_id = cand[*g.hit_index].id;
      int tgt = -1;
      for (int j = 0; j < n; ++j)
        if (nodes[j].id == tgt_id) tgt = j;
      const double dc = channel_delay_s(g.wire_length_um);
      const double arrival = ev.time + g.elapsed_s + dc + tx_s;
      q.push({arrival, seq++, detail::SimEvent::Kind::Delivery, src, tgt, ev.time, g.elapsed_s,
              dc});
      push_attempt(arrival + cfg.disassembly_s, src);
    } else {
      const int tgt = ev.target;
      if (informed[tgt]) continue;  // relays on first infection only
      informed[tgt] = true;
      ++informed_count;
      depth[tgt] = depth[ev.node] + 1;
      infector[tgt] = ev.node;
      m.infection_log.push_back({nodes[ev.node].id, nodes[tgt].id, ev.attempt_start, ev.growth_s,
                                 ev.channel_delay_s, tx_s, ev.time});
      m.informed_fraction_timeline.push_back({ev.time, fraction()});
      if (nodes[tgt].is_gateway) {
        m.delivered = true;
        m.delivery_time_s = ev.time;
        m.hops_to_gateway = depth[tgt];
        break;
      }
      push_attempt(ev.time, tgt);
    }
  }
  return m;
}

}  // namespace actinwire
