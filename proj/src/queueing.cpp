#include "leosim/queueing.hpp"

#include "leosim/errors.hpp"

namespace leosim::queueing {

bool LinkQueue::enqueue(uint64_t packet_id, double size_bits, double now_s) {
    if (size_bits <= 0.0) throw DomainError("enqueue: packet size must be > 0");
    if (backlog_bits_ + size_bits > capacity_bits_) {
        ++dropped_count_;
        dropped_bits_ += size_bits;
        return false;
    }
    if (fifo_.empty()) head_sent_bits_ = 0.0;
    fifo_.push_back({packet_id, size_bits, now_s});
    backlog_bits_ += size_bits;
    ++enqueued_count_;
    enqueued_bits_ += size_bits;
    return true;
}

void LinkQueue::service(double dt_s, double now_s, std::vector<Departure>& out) {
    if (dt_s <= 0.0) throw DomainError("service: dt must be > 0");
    if (fifo_.empty()) return;
    if (served_rate_bps_ <= 0.0) {
        ++stall_count_;
        return;
    }
    double t_used = 0.0;
    while (!fifo_.empty()) {
        QueuedPacket& head = fifo_.front();
        if (head_sent_bits_ == 0.0)
            head_service_start_s_ = now_s + t_used;
        const double need_bits = head.size_bits - head_sent_bits_;
        const double need_time = need_bits / served_rate_bps_;
        if (t_used + need_time <= dt_s) {
            t_used += need_time;
            out.push_back({head.packet_id, head.size_bits, head.enqueued_at_s,
                           head_service_start_s_, now_s + t_used});
            backlog_bits_ -= head.size_bits;
            if (backlog_bits_ < 0.0) backlog_bits_ = 0.0;
            departed_bits_ += head.size_bits;
            ++departed_count_;
            fifo_.pop_front();
            head_sent_bits_ = 0.0;
        } else {
            head_sent_bits_ += served_rate_bps_ * (dt_s - t_used);
            break;
        }
    }
}

double LinkQueue::occupancy() const {
    if (capacity_bits_ <= 0.0)
        throw ConfigError("queue.capacity_bits: must be > 0");
    double q = backlog_bits_ / capacity_bits_;
    if (q < 0.0) q = 0.0;
    if (q > 1.0) q = 1.0;
    return q;
}

}  // namespace leosim::queueing
