#include "leosim/traffic.hpp"

#include <numeric>

#include "leosim/errors.hpp"

namespace leosim::traffic {

TrafficGenerator::TrafficGenerator(const TrafficPattern& pattern,
                                   const std::vector<orbital::Gateway>& gateways)
    : pattern_(pattern), gateway_count_(gateways.size()), rng_(pattern.rng_seed) {
    if (gateways.empty())
        throw ConfigError("traffic: gateway set must not be empty");
    if (pattern.per_gateway_bps < 0.0)
        throw ConfigError("traffic.per_gateway_bps: must be >= 0");
    if (pattern.packet_bits <= 0.0)
        throw ConfigError("traffic.packet_bits: must be > 0");
    weights_.reserve(gateways.size());
    for (const auto& g : gateways) weights_.push_back(g.population_weight);
    const double wsum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (pattern.kind == TrafficPattern::Kind::Population && wsum <= 0.0)
        throw ConfigError("traffic: population weights must sum to > 0");

    arrival_rates_.resize(gateway_count_);
    for (std::size_t i = 0; i < gateway_count_; ++i) {
        double bps = pattern.per_gateway_bps;
        if (pattern.kind == TrafficPattern::Kind::Population)
            bps *= weights_[i] * double(gateway_count_) / wsum;
        arrival_rates_[i] = bps / pattern.packet_bits;
    }
}

void TrafficGenerator::generate(double dt_s, double now_s,
                                std::vector<Packet>& out) {
    if (dt_s <= 0.0) throw DomainError("traffic.generate: dt must be > 0");
    if (gateway_count_ < 2) return;  // no non-local destination exists
    for (std::size_t src = 0; src < gateway_count_; ++src) {
        const double mean = arrival_rates_[src] * dt_s;
        if (mean <= 0.0) continue;
        std::poisson_distribution<int> arrivals(mean);
        const int n = arrivals(rng_);
        for (int k = 0; k < n; ++k) {
            Packet p;
            p.id = next_id_++;
            p.size_bits = pattern_.packet_bits;
            p.src_gateway = int(src);
            p.created_s = now_s;
            if (pattern_.kind == TrafficPattern::Kind::Uniform) {
                std::uniform_int_distribution<std::size_t> pick(0, gateway_count_ - 2);
                std::size_t d = pick(rng_);
                if (d >= src) ++d;  // skip the source
                p.dst_gateway = int(d);
            } else {
                // weighted draw over all gateways except the source
                double total = 0.0;
                for (std::size_t i = 0; i < gateway_count_; ++i)
                    if (i != src) total += weights_[i];
                std::uniform_real_distribution<double> u(0.0, total);
                double x = u(rng_);
                std::size_t d = 0;
                for (std::size_t i = 0; i < gateway_count_; ++i) {
                    if (i == src) continue;
                    if (x < weights_[i]) { d = i; break; }
                    x -= weights_[i];
                    d = i;
                }
                p.dst_gateway = int(d);
            }
            out.push_back(std::move(p));
        }
    }
}

double mark_delivered(Packet& pkt, double t_s) {
    if (pkt.delivered_s.has_value())
        throw ConsistencyError("packet " + std::to_string(pkt.id) +
                               " delivered twice");
    if (pkt.drop_reason.has_value())
        throw ConsistencyError("packet " + std::to_string(pkt.id) +
                               " delivered after drop");
    if (t_s < pkt.created_s)
        throw ConsistencyError("packet " + std::to_string(pkt.id) +
                               " delivered before creation");
    pkt.delivered_s = t_s;
    return t_s - pkt.created_s;
}

}  // namespace leosim::traffic
