#pragma once

#include "smenc/interval.hpp"

namespace smenc {

/// Point in phase space: x fast, y and z slow.
struct Vec3 {
    double x;
    double y;
    double z;
};

/// Point in the slow plane.
struct Point2 {
    double y;
    double z;
};

/// Componentwise interval box over phase space.
struct IntervalVec3 {
    Interval x;
    Interval y;
    Interval z;

    static IntervalVec3 point(const Vec3& v) {
        return {Interval(v.x), Interval(v.y), Interval(v.z)};
    }

    /// Componentwise hull of two machine points (a segment box).
    static IntervalVec3 segment(const Vec3& a, const Vec3& b) {
        return {hull(Interval(a.x), Interval(b.x)),
                hull(Interval(a.y), Interval(b.y)),
                hull(Interval(a.z), Interval(b.z))};
    }

    static IntervalVec3 box(const Vec3& a, const Vec3& b, const Vec3& c) {
        return {hull(Interval(a.x), Interval(b.x), Interval(c.x)),
                hull(Interval(a.y), Interval(b.y), Interval(c.y)),
                hull(Interval(a.z), Interval(b.z), Interval(c.z))};
    }
};

inline IntervalVec3 operator-(const IntervalVec3& a, const IntervalVec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Interval dot(const IntervalVec3& a, const IntervalVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline IntervalVec3 cross(const IntervalVec3& a, const IntervalVec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline IntervalVec3 operator-(const IntervalVec3& a) {
    return {-a.x, -a.y, -a.z};
}

} // namespace smenc
