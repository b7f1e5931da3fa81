#pragma once

#include <cmath>
#include <cstdint>

namespace leosim {

inline constexpr double kPi = 3.14159265358979323846;

// Speed of light, m/s (simulation convention: exactly 3e8).
inline constexpr double kSpeedOfLightMps = 3.0e8;

// Earth gravitational parameter, km^3/s^2.
inline constexpr double kEarthMuKm3s2 = 398600.4418;

// Earth sidereal rotation rate, rad/s.
inline constexpr double kEarthRotationRadS = 7.2921150e-5;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Central angle between two position vectors, radians in [0, pi].
inline double central_angle(const Vec3& a, const Vec3& b) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    double c = a.dot(b) / (na * nb);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a+1, continued fraction otherwise.
double regularized_gamma_p(double a, double x);

// Deterministic sub-seed derivation: one master seed, one tag per consumer.
uint64_t derive_seed(uint64_t master, uint64_t tag);

// FNV-1a 64-bit hash, used for config fingerprints.
uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace leosim
