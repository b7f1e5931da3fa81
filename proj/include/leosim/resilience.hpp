#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leosim/channel.hpp"
#include "leosim/orbital.hpp"

namespace leosim::resilience {

struct OutageParams {
    double snr_threshold = 1.0;  // linear
    channel::FadingModel fading;
    double p_out_threshold = 0.1;  // per-path bound checked by the validator

    void validate() const;
};

// Directed links making up one routed path, as (from, to) flat indices.
// Ground endpoints are handled separately via the up/downlink outages.
struct PathSelection {
    std::vector<std::pair<int, int>> links;

    // True iff links form a connected walk head-to-tail.
    bool connected() const;
};

struct ResilienceWeights {
    double outage = 0.5;  // omega_1
    double queue = 0.5;   // omega_2

    void validate() const;  // must sum to 1
};

// Aggregation of the queue-freeness term over a path's links.
enum class QueueAggregation {
    MaxOfMax,    // best endpoint of the best link (printed form)
    Bottleneck,  // worst endpoint of the worst link
};

// Pr{SNR <= threshold} under Nakagami-m fading with the given mean SNR.
// Regularized lower incomplete gamma P(m, m*th/mean); mean 0 gives 1.
double hop_outage(double mean_snr, const OutageParams& params);
// Deterministic link (no fading): 0/1 step at the threshold.
double hop_outage_deterministic(double snr, const OutageParams& params);

// 1 - (1-P_u)(1-P_d) * prod(1 - P_link); hops assumed independent.
double path_outage(std::span<const double> link_outages, double uplink_outage,
                   double downlink_outage);

// R = w1*(1 - P_out_all) + w2 * agg over links of the endpoint queue
// freeness. Empty selection keeps only the outage term.
double resilience_score(double p_out_all,
                        std::span<const std::pair<double, double>> endpoint_occupancies,
                        const ResilienceWeights& weights,
                        QueueAggregation agg = QueueAggregation::MaxOfMax);

// Per-link state feature in [0,1]: 0 while failed, otherwise
// w1*(1 - hop outage) + w2*(1 - max endpoint occupancy).
double link_resilience_feature(double hop_outage_p, bool failed,
                               double occupancy_i, double occupancy_j,
                               const ResilienceWeights& weights);

struct FailureEvent {
    enum class Kind { Jamming, Hardware };
    bool is_node = true;
    orbital::SatelliteId target{};   // node target, or link endpoint a
    orbital::SatelliteId target_b{};  // link endpoint b (links fail both ways)
    double start_s = 0.0;
    double duration_s = 0.0;
    Kind kind = Kind::Jamming;

    bool active(double t_s) const {
        return t_s >= start_s && t_s < start_s + duration_s;
    }
};

// One event per record:
//   node <plane> <slot> <start_s> <duration_s> <jamming|hardware>
//   link <plane_a> <slot_a> <plane_b> <slot_b> <start_s> <duration_s> <kind>
std::vector<FailureEvent> load_failure_schedule(const std::string& path);

// Adjacency with links inside active event windows removed. A failed node
// loses all four ISLs (its ground link is masked by the engine).
std::vector<orbital::NeighborSet> apply_failures(
    const std::vector<orbital::NeighborSet>& adjacency,
    const std::vector<FailureEvent>& schedule, double now_s,
    const orbital::ConstellationParams& params,
    std::vector<bool>* node_failed = nullptr);

}  // namespace leosim::resilience
