#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leosim/mathutil.hpp"

namespace leosim::orbital {

// Walker-Delta shell parameters. Eccentricity is carried for reporting but
// orbits are propagated as exactly circular.
struct ConstellationParams {
    int plane_count = 72;
    int sats_per_plane = 22;
    double altitude_km = 550.0;
    double inclination_rad = deg2rad(53.0);
    double eccentricity = 1e-5;
    double phasing_offset_rad = 0.0;  // in-plane phase shift between adjacent planes
    double earth_radius_km = 6371.0;
    bool cross_seam_links = true;  // false drops inter-plane links across the 0/O-1 seam

    int total_sats() const { return plane_count * sats_per_plane; }
    double orbit_radius_km() const { return earth_radius_km + altitude_km; }

    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct SatelliteId {
    int plane = 0;
    int slot = 0;

    bool operator==(const SatelliteId&) const = default;
};

inline int flat_index(const SatelliteId& s, const ConstellationParams& p) {
    return s.plane * p.sats_per_plane + s.slot;
}
inline SatelliteId from_flat(int idx, const ConstellationParams& p) {
    return {idx / p.sats_per_plane, idx % p.sats_per_plane};
}

struct Gateway {
    std::string id;
    double lat_rad = 0.0;
    double lon_rad = 0.0;
    double population_weight = 1.0;
};

// One gateway per record: id lat_deg lon_deg population_weight.
// '#' starts a comment; blank lines are skipped.
std::vector<Gateway> load_gateways(const std::string& path);

// ISL antenna slots, fixed order. Up/Down follow the orbital slot index,
// Left/Right the plane index.
enum class Direction : int { Up = 0, Down = 1, Left = 2, Right = 3 };
inline constexpr int kNumDirections = 4;

using NeighborSet = std::array<std::optional<SatelliteId>, kNumDirections>;

// Static constellation descriptor; positions at any time are derived from it.
class Constellation {
public:
    static Constellation build(const ConstellationParams& params);

    const ConstellationParams& params() const { return params_; }
    double period_s() const { return period_s_; }

    // Earth-centered inertial position, km. Circular orbit, Kepler period.
    Vec3 position_km(const SatelliteId& sat, double t_s) const;
    Vec3 position_km(int flat_idx, double t_s) const;

    // +Grid neighbors: slot+-1 in plane (Up/Down), same slot in plane+-1
    // (Left/Right). Intra-plane wraps; inter-plane wraps unless the seam
    // is disabled.
    NeighborSet isl_neighbors(const SatelliteId& sat) const;

private:
    ConstellationParams params_;
    double period_s_ = 0.0;
    double mean_motion_rad_s_ = 0.0;
};

// Gateway position in the inertial frame (Earth rotates at sidereal rate).
Vec3 gateway_position_km(const Gateway& g, double t_s, double earth_radius_km);

// Elevation of a satellite above the gateway's local horizon, radians.
double elevation_rad(const Vec3& sat_km, const Vec3& gw_km);

// Visible satellite minimizing slant distance; ties break to the smallest
// flat index. Throws CoverageGapError when nothing is above min_elevation.
int gateway_attachment(const Constellation& c, const Gateway& g, double t_s,
                       double min_elevation_rad);

// Immutable view of the constellation at one instant.
struct ConstellationSnapshot {
    double time_s = 0.0;
    std::vector<Vec3> positions_km;      // by flat index
    std::vector<NeighborSet> adjacency;  // by flat index, static +Grid pattern
    std::vector<int> gateway_attach;     // by gateway index; -1 = coverage gap
};

// allow_gaps=false rethrows the first CoverageGapError; true records -1.
ConstellationSnapshot make_snapshot(const Constellation& c,
                                    const std::vector<Gateway>& gateways,
                                    double t_s, double min_elevation_rad,
                                    bool allow_gaps = false);

}  // namespace leosim::orbital
