#pragma once

#include <cmath>
#include <stdexcept>

namespace aimbench {

// 3D vector used both for unit view/hit directions and for small
// angular offsets. Directions are stored in the shooter's eye frame.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    if (n <= 0.0) throw std::domain_error("cannot normalize zero-length vector");
    return {a.x / n, a.y / n, a.z / n};
}

inline bool is_unit(const Vec3& a, double tol = 1e-9) {
    return std::fabs(norm(a) - 1.0) <= tol;
}

// Angle between two non-zero vectors, in [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
    double na = norm(a);
    double nb = norm(b);
    if (na <= 0.0 || nb <= 0.0) throw std::domain_error("angle of zero-length vector");
    double c = dot(a, b) / (na * nb);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

// Yaw/pitch parameterization: yaw rotates about +z, pitch is elevation.
// (cos p cos y, cos p sin y, sin p); yaw in (-pi, pi], pitch in [-pi/2, pi/2].
inline Vec3 dir_from_yaw_pitch(double yaw, double pitch) {
    double cp = std::cos(pitch);
    return {cp * std::cos(yaw), cp * std::sin(yaw), std::sin(pitch)};
}

inline double yaw_of(const Vec3& d) { return std::atan2(d.y, d.x); }

inline double pitch_of(const Vec3& d) {
    double z = d.z;
    if (z > 1.0) z = 1.0;
    if (z < -1.0) z = -1.0;
    return std::asin(z);
}

// Spherical linear interpolation between unit vectors. t in [0,1].
// Falls back to normalized lerp when the endpoints are nearly parallel.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    double ang = angle_between(a, b);
    if (ang < 1e-9) {
        Vec3 v{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
        return normalized(v);
    }
    if (ang > M_PI - 1e-9) throw std::domain_error("slerp of antipodal directions is undefined");
    double s = std::sin(ang);
    double wa = std::sin((1.0 - t) * ang) / s;
    double wb = std::sin(t * ang) / s;
    return normalized(Vec3{wa * a.x + wb * b.x, wa * a.y + wb * b.y, wa * a.z + wb * b.z});
}

// Offsets a direction by (dyaw, dpitch) in its own yaw/pitch chart.
inline Vec3 offset_dir(const Vec3& d, double dyaw, double dpitch) {
    return dir_from_yaw_pitch(yaw_of(d) + dyaw, pitch_of(d) + dpitch);
}

}  // namespace aimbench
