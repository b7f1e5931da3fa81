#include "leosim/resilience.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "leosim/errors.hpp"

namespace leosim::resilience {

void OutageParams::validate() const {
    if (snr_threshold <= 0.0)
        throw ConfigError("resilience.snr_threshold: must be > 0");
    if (p_out_threshold <= 0.0 || p_out_threshold >= 1.0)
        throw ConfigError("resilience.p_out_threshold: must be in (0,1)");
    fading.validate();
}

void ResilienceWeights::validate() const {
    if (outage < 0.0 || queue < 0.0)
        throw ConfigError("resilience.weights: must be nonnegative");
    if (std::fabs(outage + queue - 1.0) > 1e-9)
        throw ConfigError("resilience.weights: must sum to 1");
}

bool PathSelection::connected() const {
    for (std::size_t i = 1; i < links.size(); ++i)
        if (links[i].first != links[i - 1].second) return false;
    return true;
}

double hop_outage(double mean_snr, const OutageParams& params) {
    params.validate();
    if (mean_snr <= 0.0) return 1.0;
    const double m = params.fading.nakagami_m;
    return regularized_gamma_p(m, m * params.snr_threshold / mean_snr);
}

double hop_outage_deterministic(double snr, const OutageParams& params) {
    params.validate();
    return snr <= params.snr_threshold ? 1.0 : 0.0;
}

double path_outage(std::span<const double> link_outages, double uplink_outage,
                   double downlink_outage) {
    double survival = (1.0 - uplink_outage) * (1.0 - downlink_outage);
    for (double p : link_outages) survival *= 1.0 - p;
    return 1.0 - survival;
}

double resilience_score(
    double p_out_all,
    std::span<const std::pair<double, double>> endpoint_occupancies,
    const ResilienceWeights& weights, QueueAggregation agg) {
    weights.validate();
    const double outage_term = weights.outage * (1.0 - p_out_all);
    if (endpoint_occupancies.empty()) return outage_term;
    double q_agg = agg == QueueAggregation::MaxOfMax ? 0.0 : 1.0;
    for (const auto& [qi, qj] : endpoint_occupancies) {
        if (agg == QueueAggregation::MaxOfMax)
            q_agg = std::max(q_agg, std::max(1.0 - qi, 1.0 - qj));
        else
            q_agg = std::min(q_agg, std::min(1.0 - qi, 1.0 - qj));
    }
    return outage_term + weights.queue * q_agg;
}

double link_resilience_feature(double hop_outage_p, bool failed,
                               double occupancy_i, double occupancy_j,
                               const ResilienceWeights& weights) {
    if (failed) return 0.0;
    return weights.outage * (1.0 - hop_outage_p) +
           weights.queue * (1.0 - std::max(occupancy_i, occupancy_j));
}

std::vector<FailureEvent> load_failure_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("failures.file: cannot open '" + path + "'");
    std::vector<FailureEvent> out;
    std::string line;
    int lineno = 0;
    auto parse_kind = [&](const std::string& s) {
        if (s == "jamming") return FailureEvent::Kind::Jamming;
        if (s == "hardware") return FailureEvent::Kind::Hardware;
        throw ConfigError("failures.file: unknown kind '" + s + "' at line " +
                          std::to_string(lineno));
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        FailureEvent ev;
        std::string kind;
        if (tag == "node") {
            if (!(ls >> ev.target.plane >> ev.target.slot >> ev.start_s >>
                  ev.duration_s >> kind))
                throw ConfigError("failures.file: parse error at line " +
                                  std::to_string(lineno));
            ev.is_node = true;
        } else if (tag == "link") {
            if (!(ls >> ev.target.plane >> ev.target.slot >> ev.target_b.plane >>
                  ev.target_b.slot >> ev.start_s >> ev.duration_s >> kind))
                throw ConfigError("failures.file: parse error at line " +
                                  std::to_string(lineno));
            ev.is_node = false;
        } else {
            throw ConfigError("failures.file: unknown record '" + tag +
                              "' at line " + std::to_string(lineno));
        }
        ev.kind = parse_kind(kind);
        if (ev.duration_s <= 0.0)
            throw ConfigError("failures.file: duration must be > 0 at line " +
                              std::to_string(lineno));
        out.push_back(ev);
    }
    return out;
}

std::vector<orbital::NeighborSet> apply_failures(
    const std::vector<orbital::NeighborSet>& adjacency,
    const std::vector<FailureEvent>& schedule, double now_s,
    const orbital::ConstellationParams& params, std::vector<bool>* node_failed) {
    std::vector<orbital::NeighborSet> eff = adjacency;
    std::vector<bool> down(adjacency.size(), false);
    auto drop_link = [&](int a, int b) {
        for (auto& nbr : eff[a])
            if (nbr && flat_index(*nbr, params) == b) nbr.reset();
        for (auto& nbr : eff[b])
            if (nbr && flat_index(*nbr, params) == a) nbr.reset();
    };
    for (const auto& ev : schedule) {
        if (!ev.active(now_s)) continue;
        if (ev.is_node) {
            const int idx = flat_index(ev.target, params);
            if (idx < 0 || idx >= int(eff.size())) continue;
            down[idx] = true;
            for (auto& nbr : eff[idx]) {
                if (!nbr) continue;
                drop_link(idx, flat_index(*nbr, params));
            }
        } else {
            const int a = flat_index(ev.target, params);
            const int b = flat_index(ev.target_b, params);
            if (a < 0 || a >= int(eff.size()) || b < 0 || b >= int(eff.size()))
                continue;
            drop_link(a, b);
        }
    }
    if (node_failed) *node_failed = std::move(down);
    return eff;
}

}  // namespace leosim::resilience
