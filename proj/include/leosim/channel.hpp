#pragma once

#include "leosim/mathutil.hpp"

namespace leosim::channel {

// Free-space link budget. All quantities linear and SI internally; distance
// is carried in km and converted to meters inside the evaluation.
struct LinkBudget {
    double tx_power_w = 20.0;
    double tx_gain = 1e6;  // linear (60 dB)
    double rx_gain = 1e6;
    double distance_km = 1000.0;
    double path_loss_exponent = 2.0;
    double noise_power_w = 2e-12;
    double carrier_hz = 30e9;
    double bandwidth_hz = 500e6;

    double wavelength_m() const { return kSpeedOfLightMps / carrier_hz; }
    double unit_path_loss() const { return 4.0 * kPi / wavelength_m(); }

    void validate() const;  // throws DomainError on nonpositive inputs
};

struct FadingModel {
    double nakagami_m = 2.0;  // mean power normalized to 1

    void validate() const;  // m >= 0.5
};

// Per-hop latency decomposition; total is the exact sum of the parts.
struct HopLatency {
    double propagation_s = 0.0;
    double transmission_s = 0.0;
    double queueing_s = 0.0;

    double total_s() const { return propagation_s + transmission_s + queueing_s; }
    bool stalled() const;  // rate 0 with pending bits
};

// ISL SNR: P * d^-alpha * |h|^2 * Gi * Gj / (q * sigma^2), d in meters.
double isl_snr(const LinkBudget& budget, double channel_gain = 1.0);

// Shannon rate, bits/s.
double rate_from_snr(double snr, double bandwidth_hz);
// Inverse: 2^(R/W) - 1.
double snr_from_rate(double rate_bps, double bandwidth_hz);

// Ground power budgets: the terminal transmits on the uplink, the satellite
// on the downlink. No distance term in the ground model.
struct GroundBudget {
    double terminal_power_w = 10.0;
    double satellite_power_w = 20.0;
    double terminal_gain = 1e6;
    double satellite_gain = 1e6;
    double noise_power_w = 2e-12;
    double bandwidth_hz = 500e6;

    void validate() const;
};

enum class GroundDirection { Uplink, Downlink };

// P * Gi * Gj * |g|^2 / sigma^2 with P selected by direction.
double ground_snr(const GroundBudget& budget, GroundDirection dir,
                  double fading_power = 1.0);

// Noise power in watts from a PSD in dBm/Hz over a bandwidth.
double noise_power_w(double psd_dbm_per_hz, double bandwidth_hz);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// propagation = d/c, transmission = packet_bits/rate, queueing = backlog/rate.
// rate == 0 with pending bits yields infinite components (link stall).
HopLatency hop_latency(double distance_km, double rate_bps,
                       double queue_backlog_bits, double packet_bits);

}  // namespace leosim::channel
