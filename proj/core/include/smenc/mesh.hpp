#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "smenc/system.hpp"
#include "smenc/vec.hpp"

namespace smenc {

/// Triangulation of a region of the slow plane.  Faces are counterclockwise
/// vertex-index triples; `star[i]` lists the faces incident to vertex i in
/// ascending order.  Immutable once built.
struct PlanarMesh {
    std::vector<Point2> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<std::vector<int>> star;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    const std::vector<int>& vertex_star(int i) const {
        if (i < 0 || i >= vertex_count()) throw IndexError("vertex index out of range");
        return star[i];
    }

    /// Number of distinct undirected edges.
    int edge_count() const;
};

/// Density weight for vertex generation; larger values shrink the local step.
using DensityFn = std::function<double(double y, double z)>;

/// Geometry-adapted vertex set: starting at the lower corner, advance along y
/// with local step  base / (1 + kappa(y, z_min)),  clamping the final point to
/// y_max; each column then advances along z the same way.  The base step is
/// the domain diagonal divided by d.  Points come out column-major and the
/// construction is deterministic.  Boundary points that would land closer than
/// 1e-3 of a step to their predecessor are merged onto the boundary.
std::vector<Point2> generate_vertices(const Domain2& dom, int d, const DensityFn& kappa);

/// Delaunay triangulation (Bowyer-Watson).  The in-circle and orientation
/// predicates run through an interval filter and fall back to exact rational
/// arithmetic when the filter straddles zero.  Exactly cocircular quadruples
/// are resolved by treating the new point as outside the circumcircle, so the
/// retained diagonal is fixed by insertion order (column-major lexicographic
/// for generated vertex sets); either diagonal satisfies the non-strict
/// empty-circumcircle property.
PlanarMesh triangulate(const std::vector<Point2>& points);

/// A planar mesh lifted to a graph over the slow plane: one fast coordinate
/// per vertex, combinatorics shared with the mesh.
struct LiftedSurface {
    std::shared_ptr<const PlanarMesh> mesh;
    std::vector<double> fast;

    Vec3 vertex(int i) const {
        const Point2& p = mesh->vertices[i];
        return {fast[i], p.y, p.z};
    }
};

using HeightMapFn = std::function<double(double y, double z)>;

LiftedSurface lift(std::shared_ptr<const PlanarMesh> mesh, const HeightMapFn& height);

/// Exact-sign orientation test: +1 if (a,b,c) is counterclockwise, -1 if
/// clockwise, 0 if collinear.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Exact-sign in-circle test for a counterclockwise triangle (a,b,c): +1 if d
/// lies strictly inside the circumcircle, -1 strictly outside, 0 cocircular.
int in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

} // namespace smenc
