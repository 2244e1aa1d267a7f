#include "smenc/transversality.hpp"

#include <cmath>

namespace smenc {

IntervalVec3 face_normal(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
    const IntervalVec3 a = IntervalVec3::point(v2) - IntervalVec3::point(v1);
    const IntervalVec3 b = IntervalVec3::point(v3) - IntervalVec3::point(v1);
    IntervalVec3 n = cross(a, b);
    switch (sign_class(n.x)) {
        case SignClass::Positive: return n;
        case SignClass::Negative: return -n;
        case SignClass::Straddles: break;
    }
    throw FoldProximity("face normal has no definite fast component");
}

FaceGeometry FaceGeometry::from(const SurfaceView& surface, int face) {
    const auto& f = surface.mesh->faces[face];
    FaceGeometry g;
    g.v1 = surface.vertex(f[0]);
    g.v2 = surface.vertex(f[1]);
    g.v3 = surface.vertex(f[2]);
    g.normal = face_normal(g.v1, g.v2, g.v3);
    g.box = IntervalVec3::box(g.v1, g.v2, g.v3);
    return g;
}

namespace {

int to_sign(const Interval& v) {
    switch (sign_class(v)) {
        case SignClass::Positive: return 1;
        case SignClass::Negative: return -1;
        default: return 0;
    }
}

Interval flux_at(const SlowFastSystem& sys, const Vec3& v, const IntervalVec3& n) {
    return dot(sys.flow(IntervalVec3::point(v)), n);
}

} // namespace

FaceCheck check_face(const SlowFastSystem& sys, const FaceGeometry& face) {
    try {
        const IntervalVec3 g = sys.flux_gradient(face.box, face.normal);
        const bool monotone = sign_class(g.x) != SignClass::Straddles ||
                              sign_class(g.y) != SignClass::Straddles ||
                              sign_class(g.z) != SignClass::Straddles;
        if (!monotone) {
            const Interval v = dot(sys.flow(face.box), face.normal);
            return {to_sign(v), 'a', v};
        }

        // F·n has no critical point inside the face; restrict to the edges.
        const Vec3* vs[3] = {&face.v1, &face.v2, &face.v3};
        const int edge_ends[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        IntervalVec3 edge_box[3];
        bool edge_monotone[3];
        bool all_monotone = true;
        for (int e = 0; e < 3; ++e) {
            const Vec3& vi = *vs[edge_ends[e][0]];
            const Vec3& vj = *vs[edge_ends[e][1]];
            edge_box[e] = IntervalVec3::segment(vi, vj);
            const IntervalVec3 ge = sys.flux_gradient(edge_box[e], face.normal);
            const IntervalVec3 dir = IntervalVec3::point(vj) - IntervalVec3::point(vi);
            edge_monotone[e] = !dot(ge, dir).contains_zero();
            all_monotone = all_monotone && edge_monotone[e];
        }

        if (all_monotone) {
            const Interval h = hull(flux_at(sys, face.v1, face.normal),
                                    flux_at(sys, face.v2, face.normal),
                                    flux_at(sys, face.v3, face.normal));
            return {to_sign(h), 'b', h};
        }

        Interval h;
        bool first = true;
        for (int e = 0; e < 3; ++e) {
            Interval part;
            if (edge_monotone[e]) {
                part = hull(flux_at(sys, *vs[edge_ends[e][0]], face.normal),
                            flux_at(sys, *vs[edge_ends[e][1]], face.normal));
            } else {
                part = sys.flux_on_edge(*vs[edge_ends[e][0]], *vs[edge_ends[e][1]],
                                        face.normal);
            }
            h = first ? part : hull(h, part);
            first = false;
        }
        return {to_sign(h), 'c', h};
    } catch (const DomainError&) {
        return {0, 'e', Interval()};
    } catch (const FoldError&) {
        return {0, 'e', Interval()};
    }
}

TransversalityReport surface_transversality(const SlowFastSystem& sys,
                                            const SurfaceView& surface,
                                            std::span<const int> faces) {
    std::vector<int> all;
    if (faces.empty()) {
        all.resize(surface.mesh->face_count());
        for (int i = 0; i < surface.mesh->face_count(); ++i) all[i] = i;
        faces = all;
    }

    TransversalityReport report;
    report.face_count = int(faces.size());
    report.signs.reserve(faces.size());
    for (int fi : faces) {
        FaceCheck c;
        try {
            c = check_face(sys, FaceGeometry::from(surface, fi));
        } catch (const FoldProximity&) {
            c = {0, 'n', Interval()};
        }
        report.signs.push_back(std::int8_t(c.sign));
        report.intersections += c.sign;
        if (c.sign == 0)
            report.failures.push_back({fi, c.branch, c.value.lo, c.value.hi});
    }
    return report;
}

bool faces_uniform(const SlowFastSystem& sys, const SurfaceView& surface,
                   std::span<const int> faces, int required_sign) {
    for (int fi : faces) {
        FaceCheck c;
        try {
            c = check_face(sys, FaceGeometry::from(surface, fi));
        } catch (const FoldProximity&) {
            return false;
        }
        if (c.sign != required_sign) return false;
    }
    return true;
}

EnclosurePair verify_pair(const SlowFastSystem& sys, const LiftedSurface& approx,
                          double N0) {
    const double floor_N = std::ldexp(1.0, -18);
    double N = N0;
    TransversalityReport last_left, last_right;
    while (N > floor_N) {
        EnclosurePair pair = build_pair(approx, sys, N);
        TransversalityReport left = surface_transversality(sys, pair.left());
        TransversalityReport right = surface_transversality(sys, pair.right());
        if (left.uniformly_positive() && right.uniformly_negative()) return pair;
        last_left = std::move(left);
        last_right = std::move(right);
        N *= 0.5;
    }
    throw VerificationFailure("transversality verification failed for every "
                              "shift divisor down to 2^-18",
                              std::move(last_left), std::move(last_right), N);
}

} // namespace smenc
