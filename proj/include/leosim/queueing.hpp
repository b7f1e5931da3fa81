#pragma once

#include <cstdint>
#include <deque>
#include <vector>

namespace leosim::queueing {

struct QueuedPacket {
    uint64_t packet_id = 0;
    double size_bits = 0.0;
    double enqueued_at_s = 0.0;
};

struct Departure {
    uint64_t packet_id = 0;
    double size_bits = 0.0;
    double enqueued_at_s = 0.0;
    double service_start_s = 0.0;  // first bit on the wire
    double departed_at_s = 0.0;    // last bit on the wire
};

// One FIFO transmission buffer feeding one directed link. The engine sets
// the served rate from the channel model at each snapshot refresh.
class LinkQueue {
public:
    explicit LinkQueue(double capacity_bits = 1e9) : capacity_bits_(capacity_bits) {}

    // Tail-drop: accepted iff backlog + size <= capacity.
    bool enqueue(uint64_t packet_id, double size_bits, double now_s);

    // Drains up to served_rate * dt bits in FIFO order; a partially
    // transmitted head carries over as residual. Departures get exact
    // timestamps within [now, now+dt].
    void service(double dt_s, double now_s, std::vector<Departure>& out);

    void set_served_rate(double bps) { served_rate_bps_ = bps; }
    double served_rate() const { return served_rate_bps_; }

    double backlog_bits() const { return backlog_bits_; }
    double capacity_bits() const { return capacity_bits_; }
    std::size_t size() const { return fifo_.size(); }
    bool empty() const { return fifo_.empty(); }

    // backlog/capacity clamped to [0,1]; throws ConfigError on zero capacity.
    double occupancy() const;

    // Conservation ledger.
    uint64_t enqueued_count() const { return enqueued_count_; }
    uint64_t departed_count() const { return departed_count_; }
    uint64_t dropped_count() const { return dropped_count_; }
    uint64_t stall_count() const { return stall_count_; }
    double enqueued_bits() const { return enqueued_bits_; }
    double departed_bits() const { return departed_bits_; }
    double dropped_bits() const { return dropped_bits_; }

private:
    double capacity_bits_;
    double backlog_bits_ = 0.0;
    double served_rate_bps_ = 0.0;
    double head_sent_bits_ = 0.0;  // residual of the in-flight head packet
    double head_service_start_s_ = 0.0;
    std::deque<QueuedPacket> fifo_;
    uint64_t enqueued_count_ = 0, departed_count_ = 0, dropped_count_ = 0;
    uint64_t stall_count_ = 0;
    double enqueued_bits_ = 0.0, departed_bits_ = 0.0, dropped_bits_ = 0.0;
};

}  // namespace leosim::queueing
