#include "leosim/channel.hpp"

#include <cmath>
#include <limits>

#include "leosim/errors.hpp"

namespace leosim::channel {

void LinkBudget::validate() const {
    if (tx_power_w <= 0.0) throw DomainError("link budget: tx_power must be > 0");
    if (tx_gain <= 0.0 || rx_gain <= 0.0)
        throw DomainError("link budget: antenna gains must be > 0");
    if (distance_km <= 0.0) throw DomainError("link budget: distance must be > 0");
    if (path_loss_exponent <= 0.0)
        throw DomainError("link budget: path loss exponent must be > 0");
    if (noise_power_w <= 0.0) throw DomainError("link budget: noise must be > 0");
    if (carrier_hz <= 0.0) throw DomainError("link budget: carrier must be > 0");
    if (bandwidth_hz <= 0.0) throw DomainError("link budget: bandwidth must be > 0");
}

void FadingModel::validate() const {
    if (nakagami_m < 0.5) throw DomainError("fading: nakagami m must be >= 0.5");
}

void GroundBudget::validate() const {
    if (terminal_power_w <= 0.0 || satellite_power_w <= 0.0)
        throw DomainError("ground budget: powers must be > 0");
    if (terminal_gain <= 0.0 || satellite_gain <= 0.0)
        throw DomainError("ground budget: gains must be > 0");
    if (noise_power_w <= 0.0) throw DomainError("ground budget: noise must be > 0");
    if (bandwidth_hz <= 0.0) throw DomainError("ground budget: bandwidth must be > 0");
}

bool HopLatency::stalled() const {
    return !std::isfinite(transmission_s) || !std::isfinite(queueing_s);
}

double isl_snr(const LinkBudget& budget, double channel_gain) {
    budget.validate();
    if (channel_gain < 0.0) throw DomainError("isl_snr: channel gain must be >= 0");
    const double d_m = budget.distance_km * 1000.0;
    return budget.tx_power_w * std::pow(d_m, -budget.path_loss_exponent) *
           channel_gain * budget.tx_gain * budget.rx_gain /
           (budget.unit_path_loss() * budget.noise_power_w);
}

double rate_from_snr(double snr, double bandwidth_hz) {
    if (snr < 0.0) throw DomainError("rate_from_snr: snr must be >= 0");
    return bandwidth_hz * std::log2(1.0 + snr);
}

double snr_from_rate(double rate_bps, double bandwidth_hz) {
    return std::exp2(rate_bps / bandwidth_hz) - 1.0;
}

double ground_snr(const GroundBudget& budget, GroundDirection dir,
                  double fading_power) {
    budget.validate();
    if (fading_power < 0.0) throw DomainError("ground_snr: |g|^2 must be >= 0");
    const double p = dir == GroundDirection::Uplink ? budget.terminal_power_w
                                                    : budget.satellite_power_w;
    return p * budget.terminal_gain * budget.satellite_gain * fading_power /
           budget.noise_power_w;
}

double noise_power_w(double psd_dbm_per_hz, double bandwidth_hz) {
    return std::pow(10.0, psd_dbm_per_hz / 10.0) * 1e-3 * bandwidth_hz;
}

HopLatency hop_latency(double distance_km, double rate_bps,
                       double queue_backlog_bits, double packet_bits) {
    HopLatency h;
    h.propagation_s = distance_km * 1000.0 / kSpeedOfLightMps;
    if (rate_bps > 0.0) {
        h.transmission_s = packet_bits / rate_bps;
        h.queueing_s = queue_backlog_bits / rate_bps;
    } else {
        const double inf = std::numeric_limits<double>::infinity();
        h.transmission_s = packet_bits > 0.0 ? inf : 0.0;
        h.queueing_s = queue_backlog_bits > 0.0 ? inf : 0.0;
    }
    return h;
}

}  // namespace leosim::channel
