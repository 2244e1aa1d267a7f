#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smenc/transversality.hpp"
#include "support.hpp"

using namespace smenc;
using namespace smenc::testing;

namespace {

// Plain-double F·n sampler used as the independent sign oracle: 200 barycentric
// samples per face.
bool face_sign_holds_under_sampling(const SingularHopf& sys, const SurfaceView& surf,
                                    int face, int sign, std::mt19937_64& rng) {
    const auto& tri = surf.mesh->faces[face];
    const Vec3 v1 = surf.vertex(tri[0]);
    const Vec3 v2 = surf.vertex(tri[1]);
    const Vec3 v3 = surf.vertex(tri[2]);
    double e1[3] = {v2.x - v1.x, v2.y - v1.y, v2.z - v1.z};
    double e2[3] = {v3.x - v1.x, v3.y - v1.y, v3.z - v1.z};
    double n[3] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                   e1[0] * e2[1] - e1[1] * e2[0]};
    if (n[0] < 0) {
        n[0] = -n[0]; n[1] = -n[1]; n[2] = -n[2];
    }
    const auto& p = sys.params();
    for (int s = 0; s < 200; ++s) {
        double l1 = uniform(rng, 0, 1), l2 = uniform(rng, 0, 1);
        if (l1 + l2 > 1) { l1 = 1 - l1; l2 = 1 - l2; }
        const double l3 = 1 - l1 - l2;
        const double x = l1 * v1.x + l2 * v2.x + l3 * v3.x;
        const double y = l1 * v1.y + l2 * v2.y + l3 * v3.y;
        const double z = l1 * v1.z + l2 * v2.z + l3 * v3.z;
        const double val = n[0] * (y - x * x) / sys.epsilon() + n[1] * (z - x) +
                           n[2] * (-p.mu - p.a * x - p.b * y - p.c * z);
        if (val * sign <= 0.0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("face normals") {
    const IntervalVec3 n1 = face_normal({0, 0, 0}, {0, 1, 0}, {0, 0, 1});
    CHECK(n1.x.contains(1.0));
    CHECK(n1.y.contains_zero());
    CHECK(n1.z.contains_zero());
    CHECK(n1.x.width() < 1e-12);

    // Swapped orientation is flipped back to a positive fast component.
    const IntervalVec3 n2 = face_normal({0, 0, 0}, {0, 0, 1}, {0, 1, 0});
    CHECK(n2.x.contains(1.0));
    CHECK(sign_class(n2.x) == SignClass::Positive);

    // A tilted plane x = y has normal proportional to (1, -1, 0).
    const IntervalVec3 n3 = face_normal({0, 0, 0}, {1, 1, 0}, {0, 0, 1});
    CHECK(sign_class(n3.x) == SignClass::Positive);
    CHECK(n3.y.contains(-n3.x.mid()));

    // A vertical face (normal in the slow plane) has no sign orientation.
    CHECK_THROWS_AS(face_normal({0, 0, 0}, {1, 0, 0}, {0.5, 0, 1}), FoldProximity);
}

TEST_CASE("constant flow fields decide faces trivially") {
    auto mesh = std::make_shared<const PlanarMesh>(
        triangulate({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    const LiftedSurface surf = lift(mesh, [](double y, double z) { return 0.1 * y - 0.2 * z; });

    const auto forward = constant_system(1.0, 0.0, 0.0);
    const auto backward = constant_system(-1.0, 0.0, 0.0);
    for (int f = 0; f < mesh->face_count(); ++f) {
        const FaceGeometry geom = FaceGeometry::from(SurfaceView(surf), f);
        CHECK(check_face(*forward, geom).sign == 1);
        CHECK(check_face(*backward, geom).sign == -1);
    }

    const TransversalityReport fwd = surface_transversality(*forward, SurfaceView(surf));
    CHECK(fwd.intersections == mesh->face_count());
    CHECK(fwd.uniformly_positive());
    CHECK(fwd.failures.empty());
    const TransversalityReport bwd = surface_transversality(*backward, SurfaceView(surf));
    CHECK(bwd.intersections == -mesh->face_count());
    CHECK(bwd.uniformly_negative());
}

TEST_CASE("undecidable faces are counted and reported") {
    auto mesh = std::make_shared<const PlanarMesh>(
        triangulate({{0, 0}, {1, 0}, {0, 1}}));
    const LiftedSurface surf = lift(mesh, [](double, double) { return 0.0; });
    // A flow tangent to the surface: F = (0, 1, 0) gives F·n = 0 on the flat face.
    const auto tangent = constant_system(0.0, 1.0, 0.0);
    const TransversalityReport rep = surface_transversality(*tangent, SurfaceView(surf));
    CHECK(rep.face_count == 1);
    CHECK(rep.intersections == 0);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].face == 0);
    CHECK(std::llabs(rep.intersections) < rep.face_count);
}

TEST_CASE("face subset selection") {
    auto mesh = std::make_shared<const PlanarMesh>(
        triangulate({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0.5, 0.5}}));
    const LiftedSurface surf = lift(mesh, [](double, double) { return 0.0; });
    const auto forward = constant_system(1.0, 0.0, 0.0);
    const std::vector<int> subset{0, 2};
    const TransversalityReport rep =
        surface_transversality(*forward, SurfaceView(surf), subset);
    CHECK(rep.face_count == 2);
    CHECK(rep.intersections == 2);
    CHECK(faces_uniform(*forward, SurfaceView(surf), subset, 1));
    CHECK(!faces_uniform(*forward, SurfaceView(surf), subset, -1));
}

TEST_CASE("verified reference pair at epsilon 1e-3") {
    const double eps = 1e-3;
    const auto sys = reference_system(eps);
    const auto mesh = strip_mesh(34);
    REQUIRE(mesh->vertex_count() > 1100);
    REQUIRE(mesh->vertex_count() < 1300);
    const LiftedSurface K0 =
        lift(mesh, [&](double y, double z) { return sys->critical_height_mid(y, z); });
    const LiftedSurface approx = build_approximation(K0, *sys);
    const EnclosurePair pair = verify_pair(*sys, approx, 64.0);

    // Frozen from the verification run on this mesh: two halvings from 64.
    CHECK(pair.shift_divisor == 16.0);
    pair.validate();

    const TransversalityReport left = surface_transversality(*sys, pair.left());
    const TransversalityReport right = surface_transversality(*sys, pair.right());
    CHECK(left.uniformly_positive());
    CHECK(right.uniformly_negative());

    // Direction opposition, spot-checked against the sampling oracle.
    std::mt19937_64 rng(777);
    for (int f = 0; f < mesh->face_count(); f += 97) {
        CHECK(face_sign_holds_under_sampling(*sys, pair.left(), f, 1, rng));
        CHECK(face_sign_holds_under_sampling(*sys, pair.right(), f, -1, rng));
    }

    // The slab is disjoint from the critical manifold on this domain.
    for (int i = 0; i < mesh->vertex_count(); ++i) {
        const Point2& p = mesh->vertices[i];
        const double h0 = sys->critical_height(Interval(p.y), Interval(p.z)).hi;
        CHECK(pair.x_left[i] > h0);
    }
}

TEST_CASE("monotone-path hulls are tighter than the full-box evaluation") {
    const double eps = 1e-3;
    const auto sys = reference_system(eps);
    std::mt19937_64 rng(4096);
    std::vector<Point2> pts;
    for (int i = 0; i < 60; ++i)
        pts.push_back({uniform(rng, 0.05, 0.2), uniform(rng, -0.01, 0.01)});
    auto mesh = std::make_shared<const PlanarMesh>(triangulate(pts));
    // A plane above the sheet: every edge sees a strictly monotone flux.
    const LiftedSurface surf = lift(mesh, [](double, double) { return 0.9; });
    int compared = 0;
    for (int f = 0; f < mesh->face_count(); ++f) {
        const FaceGeometry geom = FaceGeometry::from(SurfaceView(surf), f);
        const FaceCheck c = check_face(*sys, geom);
        if (c.branch != 'b') continue;
        const Interval full = dot(sys->flow(geom.box), geom.normal);
        CHECK(full.contains(c.value));
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("repelling sheets have the opposite crossing orientation") {
    // On the x < 0 sheet the flow crosses the candidates the other way
    // around, so the left-positive/right-negative convention cannot verify.
    // Pinned here so the convention is explicit rather than accidental.
    const double eps = 1e-3;
    const auto sys = std::make_shared<const SingularHopf>(
        eps, reference_params(), Branch::Minus);
    const Domain2 dom = strip_domain();
    auto mesh = std::make_shared<const PlanarMesh>(
        triangulate(generate_vertices(dom, 8, [&](double y, double z) {
            return sys->gradient_norm_mid(y, z);
        })));
    const LiftedSurface approx = build_approximation(
        lift(mesh, [&](double y, double z) { return sys->critical_height_mid(y, z); }),
        *sys);
    const EnclosurePair pair = build_pair(approx, *sys, 4.0);
    const TransversalityReport left = surface_transversality(*sys, pair.left());
    const TransversalityReport right = surface_transversality(*sys, pair.right());
    CHECK(left.uniformly_negative());
    CHECK(right.uniformly_positive());
    CHECK_THROWS_AS(verify_pair(*sys, approx, 4.0), VerificationFailure);
}

TEST_CASE("verification fails cleanly near the fold") {
    // Domain hugging the fold with a large epsilon: normal hyperbolicity is too
    // weak and every divisor is rejected.
    const double eps = 0.5;
    const auto sys = std::make_shared<const SingularHopf>(
        eps, reference_params(), Branch::Plus);
    const Domain2 dom{1e-4, 2e-3, -0.01, 0.01};
    auto mesh = std::make_shared<const PlanarMesh>(
        triangulate(generate_vertices(dom, 4, [&](double y, double z) {
            return sys->gradient_norm_mid(y, z);
        })));
    const LiftedSurface approx = build_approximation(
        lift(mesh, [&](double y, double z) { return sys->critical_height_mid(y, z); }),
        *sys);
    CHECK_THROWS_AS(verify_pair(*sys, approx, 64.0), VerificationFailure);

    // Loop guard: an initial divisor at or below 2^-18 fails immediately.
    try {
        verify_pair(*sys, approx, std::ldexp(1.0, -19));
        FAIL("expected VerificationFailure");
    } catch (const VerificationFailure& e) {
        CHECK(e.left.face_count == 0);
    }
}
