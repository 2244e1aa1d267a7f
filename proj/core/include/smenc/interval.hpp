#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "smenc/errors.hpp"

namespace smenc {

namespace detail {

// One step toward +inf / -inf on the double lattice.  Equivalent to
// std::nextafter but cheap enough for the per-operation outward rounding
// used below.
inline double next_up(double x) {
    if (x == 0.0) return 0x1p-1074;
    std::uint64_t b = std::bit_cast<std::uint64_t>(x);
    b += (x > 0.0) ? 1u : std::uint64_t(-1);
    return std::bit_cast<double>(b);
}

inline double next_down(double x) { return -next_up(-x); }

} // namespace detail

enum class SignClass { Positive, Negative, Straddles };

/// Closed interval [lo, hi] with finite double endpoints.  All arithmetic is
/// evaluated in round-to-nearest and then inflated outward by one ulp per
/// endpoint, so every operation returns a superset of the exact real range.
struct Interval {
    double lo;
    double hi;

    Interval() : lo(0.0), hi(0.0) {}

    explicit Interval(double v) : lo(v), hi(v) { validate(); }

    Interval(double l, double h) : lo(l), hi(h) { validate(); }

    void validate() const {
        if (!(std::isfinite(lo) && std::isfinite(hi)))
            throw DomainError("interval endpoint not finite");
        if (lo > hi) throw DomainError("interval endpoints out of order");
    }

    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    /// Largest absolute value over the interval.
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    /// Smallest absolute value over the interval (0 if it straddles).
    double mig() const {
        if (contains_zero()) return 0.0;
        return std::min(std::fabs(lo), std::fabs(hi));
    }
};

namespace detail {
inline Interval outward(double lo, double hi) {
    return Interval(next_down(lo), next_up(hi));
}
} // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
    return detail::outward(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return detail::outward(a.lo - b.hi, a.hi - b.lo);
}

inline Interval operator-(const Interval& a) {
    // Negation is exact; no inflation.
    Interval r;
    r.lo = -a.hi;
    r.hi = -a.lo;
    return r;
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return detail::outward(std::min(std::min(p1, p2), std::min(p3, p4)),
                           std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by interval containing zero");
    const double q1 = a.lo / b.lo;
    const double q2 = a.lo / b.hi;
    const double q3 = a.hi / b.lo;
    const double q4 = a.hi / b.hi;
    return detail::outward(std::min(std::min(q1, q2), std::min(q3, q4)),
                           std::max(std::max(q1, q2), std::max(q3, q4)));
}

/// a * s for an exact machine scalar s.
inline Interval scale(const Interval& a, double s) {
    const double p1 = a.lo * s;
    const double p2 = a.hi * s;
    return detail::outward(std::min(p1, p2), std::max(p1, p2));
}

inline Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw DomainError("interval sqrt of interval with negative part");
    return detail::outward(std::sqrt(a.lo), std::sqrt(a.hi));
}

/// Absolute value; exact in the endpoints, no inflation needed.
inline Interval abs(const Interval& a) {
    Interval r;
    r.lo = a.mig();
    r.hi = a.mag();
    return r;
}

/// Tight enclosure of a*a (sharper than a*a for straddling intervals).
inline Interval square(const Interval& a) {
    const double m = a.mag();
    const double n = a.mig();
    return Interval(std::max(0.0, detail::next_down(n * n)), detail::next_up(m * m));
}

/// Smallest representable interval containing a ∪ b.
inline Interval hull(const Interval& a, const Interval& b) {
    Interval r;
    r.lo = std::min(a.lo, b.lo);
    r.hi = std::max(a.hi, b.hi);
    return r;
}

inline Interval hull(const Interval& a, const Interval& b, const Interval& c) {
    return hull(hull(a, b), c);
}

/// Positive iff the whole interval is > 0, Negative iff < 0; an endpoint at
/// zero counts as Straddles.
inline SignClass sign_class(const Interval& a) {
    if (a.lo > 0.0) return SignClass::Positive;
    if (a.hi < 0.0) return SignClass::Negative;
    return SignClass::Straddles;
}

inline bool overlap(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

inline std::string to_string(const Interval& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", a.lo, a.hi);
    return buf;
}

} // namespace smenc
