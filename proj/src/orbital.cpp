#include "leosim/orbital.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "leosim/errors.hpp"

namespace leosim::orbital {

void ConstellationParams::validate() const {
    if (plane_count < 1)
        throw ConfigError("constellation.planes: must be >= 1");
    if (sats_per_plane < 3)
        throw ConfigError("constellation.sats_per_plane: must be >= 3");
    if (altitude_km <= 0.0)
        throw ConfigError("constellation.altitude_km: must be > 0");
    if (inclination_rad < 0.0 || inclination_rad > kPi)
        throw ConfigError("constellation.inclination: must be in [0, pi]");
    if (earth_radius_km <= 0.0)
        throw ConfigError("constellation.earth_radius_km: must be > 0");
    if (eccentricity < 0.0 || eccentricity > 1e-2)
        throw ConfigError("constellation.eccentricity: not near-circular");
}

Constellation Constellation::build(const ConstellationParams& params) {
    params.validate();
    Constellation c;
    c.params_ = params;
    double a = params.orbit_radius_km();
    c.mean_motion_rad_s_ = std::sqrt(kEarthMuKm3s2 / (a * a * a));
    c.period_s_ = 2.0 * kPi / c.mean_motion_rad_s_;
    return c;
}

Vec3 Constellation::position_km(const SatelliteId& sat, double t_s) const {
    if (sat.plane < 0 || sat.plane >= params_.plane_count || sat.slot < 0 ||
        sat.slot >= params_.sats_per_plane)
        throw LookupError("unknown satellite (" + std::to_string(sat.plane) +
                          "," + std::to_string(sat.slot) + ")");
    const double a = params_.orbit_radius_km();
    const double raan = 2.0 * kPi * sat.plane / params_.plane_count;
    const double phase = 2.0 * kPi * sat.slot / params_.sats_per_plane +
                         params_.phasing_offset_rad * sat.plane +
                         mean_motion_rad_s_ * t_s;
    const double ci = std::cos(params_.inclination_rad);
    const double si = std::sin(params_.inclination_rad);
    const double cp = std::cos(phase), sp = std::sin(phase);
    const double cr = std::cos(raan), sr = std::sin(raan);
    // r = Rz(raan) * Rx(incl) * [a cos(phase), a sin(phase), 0]
    return {a * (cr * cp - sr * ci * sp), a * (sr * cp + cr * ci * sp),
            a * (si * sp)};
}

Vec3 Constellation::position_km(int flat_idx, double t_s) const {
    return position_km(from_flat(flat_idx, params_), t_s);
}

NeighborSet Constellation::isl_neighbors(const SatelliteId& sat) const {
    if (sat.plane < 0 || sat.plane >= params_.plane_count || sat.slot < 0 ||
        sat.slot >= params_.sats_per_plane)
        throw LookupError("unknown satellite (" + std::to_string(sat.plane) +
                          "," + std::to_string(sat.slot) + ")");
    const int O = params_.plane_count;
    const int N = params_.sats_per_plane;
    NeighborSet n;
    n[int(Direction::Up)] = SatelliteId{sat.plane, (sat.slot + 1) % N};
    n[int(Direction::Down)] = SatelliteId{sat.plane, (sat.slot + N - 1) % N};
    if (O > 1) {
        const bool left_wraps = sat.plane == 0;
        const bool right_wraps = sat.plane == O - 1;
        if (params_.cross_seam_links || !left_wraps)
            n[int(Direction::Left)] = SatelliteId{(sat.plane + O - 1) % O, sat.slot};
        if (params_.cross_seam_links || !right_wraps)
            n[int(Direction::Right)] = SatelliteId{(sat.plane + 1) % O, sat.slot};
        if (O == 2) {
            // plane-1 and plane+1 coincide; keep a single inter-plane link
            n[int(Direction::Left)] = std::nullopt;
        }
    }
    return n;
}

std::vector<Gateway> load_gateways(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("gateways.file: cannot open '" + path + "'");
    std::vector<Gateway> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Gateway g;
        double lat_deg, lon_deg;
        if (!(ls >> g.id)) continue;  // blank line
        if (!(ls >> lat_deg >> lon_deg >> g.population_weight))
            throw ConfigError("gateways.file: parse error at " + path + ":" +
                              std::to_string(lineno));
        if (std::fabs(lat_deg) > 90.0)
            throw ConfigError("gateways.file: |lat_deg| > 90 at line " +
                              std::to_string(lineno));
        if (g.population_weight < 0.0)
            throw ConfigError("gateways.file: negative weight at line " +
                              std::to_string(lineno));
        g.lat_rad = deg2rad(lat_deg);
        g.lon_rad = deg2rad(lon_deg);
        out.push_back(g);
    }
    return out;
}

Vec3 gateway_position_km(const Gateway& g, double t_s, double earth_radius_km) {
    const double lon = g.lon_rad + kEarthRotationRadS * t_s;
    const double cl = std::cos(g.lat_rad);
    return {earth_radius_km * cl * std::cos(lon),
            earth_radius_km * cl * std::sin(lon),
            earth_radius_km * std::sin(g.lat_rad)};
}

double elevation_rad(const Vec3& sat_km, const Vec3& gw_km) {
    const Vec3 to_sat = sat_km - gw_km;
    const double d = to_sat.norm();
    const double r = gw_km.norm();
    if (d == 0.0) return kPi / 2.0;
    double s = to_sat.dot(gw_km) / (d * r);
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    return std::asin(s);
}

int gateway_attachment(const Constellation& c, const Gateway& g, double t_s,
                       double min_elevation_rad) {
    const Vec3 gw = gateway_position_km(g, t_s, c.params().earth_radius_km);
    const int n = c.params().total_sats();
    int best = -1;
    double best_slant = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const Vec3 pos = c.position_km(i, t_s);
        if (elevation_rad(pos, gw) < min_elevation_rad) continue;
        const double slant = distance(pos, gw);
        if (slant < best_slant) {  // strict: ties keep the smaller flat index
            best_slant = slant;
            best = i;
        }
    }
    if (best < 0) throw CoverageGapError(g.id, t_s);
    return best;
}

ConstellationSnapshot make_snapshot(const Constellation& c,
                                    const std::vector<Gateway>& gateways,
                                    double t_s, double min_elevation_rad,
                                    bool allow_gaps) {
    ConstellationSnapshot snap;
    snap.time_s = t_s;
    const int n = c.params().total_sats();
    snap.positions_km.resize(n);
    snap.adjacency.resize(n);
    for (int i = 0; i < n; ++i) {
        snap.positions_km[i] = c.position_km(i, t_s);
        snap.adjacency[i] = c.isl_neighbors(from_flat(i, c.params()));
    }
    snap.gateway_attach.reserve(gateways.size());
    for (const auto& g : gateways) {
        try {
            snap.gateway_attach.push_back(
                gateway_attachment(c, g, t_s, min_elevation_rad));
        } catch (const CoverageGapError&) {
            if (!allow_gaps) throw;
            snap.gateway_attach.push_back(-1);
        }
    }
    return snap;
}

}  // namespace leosim::orbital
