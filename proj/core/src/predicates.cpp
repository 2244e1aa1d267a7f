#include "smenc/mesh.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace smenc {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

int rat_sign(const BigRat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    const BigRat ay(a.y), az(a.z), by(b.y), bz(b.z), cy(c.y), cz(c.z);
    return rat_sign((by - ay) * (cz - az) - (bz - az) * (cy - ay));
}

int in_circle_exact(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
    const BigRat ady = BigRat(a.y) - BigRat(d.y), adz = BigRat(a.z) - BigRat(d.z);
    const BigRat bdy = BigRat(b.y) - BigRat(d.y), bdz = BigRat(b.z) - BigRat(d.z);
    const BigRat cdy = BigRat(c.y) - BigRat(d.y), cdz = BigRat(c.z) - BigRat(d.z);
    const BigRat alift = ady * ady + adz * adz;
    const BigRat blift = bdy * bdy + bdz * bdz;
    const BigRat clift = cdy * cdy + cdz * cdz;
    const BigRat det = ady * (bdz * clift - cdz * blift) -
                       adz * (bdy * clift - cdy * blift) +
                       alift * (bdy * cdz - cdy * bdz);
    return rat_sign(det);
}

int interval_sign(const Interval& v) {
    switch (sign_class(v)) {
        case SignClass::Positive: return 1;
        case SignClass::Negative: return -1;
        default: return 0;
    }
}

} // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const Interval ay(a.y), az(a.z);
    const Interval det = (Interval(b.y) - ay) * (Interval(c.z) - az) -
                         (Interval(b.z) - az) * (Interval(c.y) - ay);
    if (const int s = interval_sign(det)) return s;
    return orient2d_exact(a, b, c);
}

int in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const Interval dy(d.y), dz(d.z);
    const Interval ady = Interval(a.y) - dy, adz = Interval(a.z) - dz;
    const Interval bdy = Interval(b.y) - dy, bdz = Interval(b.z) - dz;
    const Interval cdy = Interval(c.y) - dy, cdz = Interval(c.z) - dz;
    const Interval alift = ady * ady + adz * adz;
    const Interval blift = bdy * bdy + bdz * bdz;
    const Interval clift = cdy * cdy + cdz * cdz;
    const Interval det = ady * (bdz * clift - cdz * blift) -
                         adz * (bdy * clift - cdy * blift) +
                         alift * (bdy * cdz - cdy * bdz);
    if (const int s = interval_sign(det)) return s;
    return in_circle_exact(a, b, c, d);
}

} // namespace smenc
