#include "smenc/system.hpp"

#include <cmath>

namespace smenc {

SingularHopfParams to_original(const RescaledHopfParams& p, double eps) {
    const double s = std::sqrt(eps);
    return {p.mu, p.A / s, p.B / eps, p.C / s};
}

RescaledHopfParams to_rescaled(const SingularHopfParams& p, double eps) {
    const double s = std::sqrt(eps);
    return {p.mu, p.a * s, p.b * eps, p.c * s};
}

IntervalVec3 SingularHopf::flow(const IntervalVec3& v) const {
    const Interval eps(eps_);
    const Interval fast = (v.y - square(v.x)) / eps;
    const Interval slow_y = v.z - v.x;
    const Interval slow_z =
        -(scale(v.x, p_.a) + scale(v.y, p_.b) + scale(v.z, p_.c) + Interval(p_.mu));
    return {fast, slow_y, slow_z};
}

IntervalVec3 SingularHopf::flux_gradient(const IntervalVec3& v,
                                         const IntervalVec3& n) const {
    const Interval eps(eps_);
    // d/dx (F·n) = -(2x/eps) n_x - n_y - a n_z
    const Interval gx = (scale(v.x, -2.0) / eps) * n.x - n.y - scale(n.z, p_.a);
    // d/dy (F·n) = n_x/eps - b n_z
    const Interval gy = n.x / eps - scale(n.z, p_.b);
    // d/dz (F·n) = n_y - c n_z
    const Interval gz = n.y - scale(n.z, p_.c);
    return {gx, gy, gz};
}

Interval SingularHopf::flux_on_edge(const Vec3& a, const Vec3& b,
                                    const IntervalVec3& n) const {
    // F·n restricted to the segment r(t) = a + t (b - a) is quadratic in t:
    // only the fast component y - x^2 is nonlinear, contributing the t^2
    // coefficient -(dx^2/eps) n_x.  A quadratic deviates from its chord by
    // a2 * (t^2 - t) with t^2 - t in [-1/4, 0].
    const Interval q0 = dot(flow(IntervalVec3::point(a)), n);
    const Interval q1 = dot(flow(IntervalVec3::point(b)), n);
    const Interval dx = Interval(b.x) - Interval(a.x);
    const Interval a2 = -(square(dx) / Interval(eps_)) * n.x;
    return hull(q0, q1) + a2 * Interval(-0.25, 0.0);
}

Interval SingularHopf::checked_y(const Interval& y) const {
    if (!(y.lo > 0.0))
        throw FoldError("singular Hopf sheet evaluated at y <= 0 (fold at y = 0)");
    return y;
}

Interval SingularHopf::critical_height(const Interval& y, const Interval&) const {
    const Interval r = sqrt(checked_y(y));
    return branch_ == Branch::Plus ? r : -r;
}

std::pair<Interval, Interval>
SingularHopf::critical_gradient(const Interval& y, const Interval&) const {
    const Interval g = Interval(1.0) / scale(sqrt(checked_y(y)), 2.0);
    return {branch_ == Branch::Plus ? g : -g, Interval(0.0)};
}

Interval SingularHopf::slow_correction(const Interval& y, const Interval& z) const {
    const Interval root = sqrt(checked_y(y));
    const Interval numer = (branch_ == Branch::Plus ? root : -root) - z;
    return numer / scale(y, 4.0);
}

void SingularHopf::require_normally_hyperbolic(const Domain2& dom) const {
    dom.validate();
    if (!(dom.y_min > 0.0))
        throw FoldError("domain touches the fold: y_min must be > 0 for the "
                        "singular Hopf sheet");
    const Interval x = critical_height(dom.y(), dom.z());
    if (sign_class(scale(x, -2.0)) == SignClass::Straddles)
        throw FoldError("fast partial of f straddles zero over the domain");
}

IntervalVec3 CallableSystem::flow(const IntervalVec3& v) const {
    const Interval eps(eps_);
    return {d_.f(v.x, v.y, v.z) / eps, d_.g_y(v.x, v.y, v.z), d_.g_z(v.x, v.y, v.z)};
}

IntervalVec3 CallableSystem::flux_gradient(const IntervalVec3& v,
                                           const IntervalVec3& n) const {
    const Interval eps(eps_);
    const Interval gx =
        (d_.df_dx(v.x, v.y, v.z) / eps) * n.x + d_.dgy_dx(v.x, v.y, v.z) * n.y +
        d_.dgz_dx(v.x, v.y, v.z) * n.z;
    const Interval gy =
        (d_.df_dy(v.x, v.y, v.z) / eps) * n.x + d_.dgy_dy(v.x, v.y, v.z) * n.y +
        d_.dgz_dy(v.x, v.y, v.z) * n.z;
    const Interval gz =
        (d_.df_dz(v.x, v.y, v.z) / eps) * n.x + d_.dgy_dz(v.x, v.y, v.z) * n.y +
        d_.dgz_dz(v.x, v.y, v.z) * n.z;
    return {gx, gy, gz};
}

Interval CallableSystem::critical_height(const Interval& y, const Interval& z) const {
    return d_.height(y, z);
}

Interval CallableSystem::fast_partial_on_sheet(const Interval& y, const Interval& z,
                                               Interval* height_out) const {
    const Interval h = d_.height(y, z);
    if (height_out) *height_out = h;
    const Interval dxf = d_.df_dx(h, y, z);
    if (sign_class(dxf) == SignClass::Straddles)
        throw FoldError("fast partial of f straddles zero on the sheet");
    return dxf;
}

std::pair<Interval, Interval>
CallableSystem::critical_gradient(const Interval& y, const Interval& z) const {
    Interval h;
    const Interval dxf = fast_partial_on_sheet(y, z, &h);
    return {-(d_.df_dy(h, y, z) / dxf), -(d_.df_dz(h, y, z) / dxf)};
}

Interval CallableSystem::slow_correction(const Interval& y, const Interval& z) const {
    Interval h;
    const Interval dxf = fast_partial_on_sheet(y, z, &h);
    const Interval numer =
        d_.df_dy(h, y, z) * d_.g_y(h, y, z) + d_.df_dz(h, y, z) * d_.g_z(h, y, z);
    return -(numer / square(dxf));
}

void CallableSystem::require_normally_hyperbolic(const Domain2& dom) const {
    dom.validate();
    fast_partial_on_sheet(dom.y(), dom.z());
}

} // namespace smenc
