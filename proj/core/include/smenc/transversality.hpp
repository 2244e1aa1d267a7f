#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smenc/enclosure.hpp"
#include "smenc/mesh.hpp"
#include "smenc/system.hpp"

namespace smenc {

/// Non-owning view of a graph surface: mesh combinatorics plus a fast
/// coordinate per vertex.
struct SurfaceView {
    const PlanarMesh* mesh;
    const double* fast;

    SurfaceView(const PlanarMesh& m, const double* x) : mesh(&m), fast(x) {}
    SurfaceView(const LiftedSurface& s) : mesh(s.mesh.get()), fast(s.fast.data()) {}

    Vec3 vertex(int i) const {
        const Point2& p = mesh->vertices[i];
        return {fast[i], p.y, p.z};
    }
};

/// Interval cross product (v2-v1) x (v3-v1), sign-flipped so the fast
/// component is strictly positive.  No magnitude normalization; only the sign
/// of F·n is ever used.  Throws FoldProximity when the fast component
/// straddles zero.
IntervalVec3 face_normal(const Vec3& v1, const Vec3& v2, const Vec3& v3);

/// One face of a candidate surface with its normal and axis-aligned
/// over-enclosure.
struct FaceGeometry {
    Vec3 v1, v2, v3;
    IntervalVec3 normal;
    IntervalVec3 box;

    static FaceGeometry from(const SurfaceView& surface, int face);
};

/// Outcome of the per-face transversality test.  `branch` records which route
/// decided the sign: 'a' full-box evaluation (no monotonicity), 'b' vertex
/// hull under full monotonicity, 'c' mixed edge/vertex hull, 'e' evaluation
/// error.  `value` is the interval whose sign class was taken.
struct FaceCheck {
    int sign;
    char branch;
    Interval value;
};

/// Transversality of the flow across one face: +1 if F·n is verified positive
/// over the whole face, -1 if verified negative, 0 if undecided.
FaceCheck check_face(const SlowFastSystem& sys, const FaceGeometry& face);

struct FaceFailure {
    int face;
    char branch;
    double lo;
    double hi;
};

struct TransversalityReport {
    std::vector<std::int8_t> signs;
    long long intersections = 0;
    int face_count = 0;
    std::vector<FaceFailure> failures;

    bool uniformly_positive() const { return intersections == face_count; }
    bool uniformly_negative() const { return intersections == -face_count; }
};

/// Signed sum of per-face transversality over `faces` (default: every face).
/// Failures are recorded, never thrown.
TransversalityReport surface_transversality(const SlowFastSystem& sys,
                                            const SurfaceView& surface,
                                            std::span<const int> faces = {});

/// Fast path for local re-verification: true iff every listed face checks
/// with the required sign; exits on the first violation.
bool faces_uniform(const SlowFastSystem& sys, const SurfaceView& surface,
                   std::span<const int> faces, int required_sign);

/// Candidate pair rejected down to the smallest shift divisor.  Carries the
/// reports of the last attempt for diagnosis.
struct VerificationFailure : Error {
    VerificationFailure(std::string msg, TransversalityReport l, TransversalityReport r,
                        double last_N)
        : Error(std::move(msg)), left(std::move(l)), right(std::move(r)),
          last_divisor(last_N) {}

    TransversalityReport left;
    TransversalityReport right;
    double last_divisor;
};

/// Verification loop: builds the candidate pair at divisor N0 and halves N
/// until the left surface is uniformly +1 and the right uniformly -1
/// (trajectories cross inward from both sides), or N reaches 2^-18.  Returns
/// the verified pair with its divisor recorded.
EnclosurePair verify_pair(const SlowFastSystem& sys, const LiftedSurface& approx,
                          double N0 = 64.0);

} // namespace smenc
