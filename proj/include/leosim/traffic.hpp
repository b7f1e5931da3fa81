#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leosim/orbital.hpp"

namespace leosim::traffic {

struct Packet {
    uint64_t id = 0;
    double size_bits = 64000.0;  // 64 kb default
    int src_gateway = -1;
    int dst_gateway = -1;
    double created_s = 0.0;
    bool tagged = false;  // foreground measurement flow
    std::vector<int> hop_trace;  // flat satellite ids, in visit order
    std::optional<double> delivered_s;
    std::optional<std::string> drop_reason;
};

struct TrafficPattern {
    enum class Kind { Uniform, Population };
    Kind kind = Kind::Uniform;
    double per_gateway_bps = 0.0;  // Uniform: per source; Population: scaled by weight share
    double packet_bits = 64000.0;
    uint64_t rng_seed = 1;
};

// Poisson arrivals per source gateway; destination drawn uniformly or by
// population weight, never equal to the source. Same-gateway traffic is
// delivered locally and never enters the constellation, so it is not
// generated at all.
class TrafficGenerator {
public:
    TrafficGenerator(const TrafficPattern& pattern,
                     const std::vector<orbital::Gateway>& gateways);

    // Appends packets created during [now, now+dt) to out.
    void generate(double dt_s, double now_s, std::vector<Packet>& out);

    uint64_t generated_count() const { return next_id_; }

private:
    TrafficPattern pattern_;
    std::size_t gateway_count_;
    std::vector<double> weights_;       // population weights
    std::vector<double> arrival_rates_;  // packets/s per source gateway
    std::mt19937_64 rng_;
    uint64_t next_id_ = 0;
};

// Records a delivery; returns end-to-end latency. Throws ConsistencyError on
// double delivery, delivery of a dropped packet, or time running backwards.
double mark_delivered(Packet& pkt, double t_s);

}  // namespace leosim::traffic
