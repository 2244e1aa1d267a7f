#include "smenc/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace smenc {

namespace {

constexpr std::size_t kMaxVertices = 10'000'000;
constexpr double kMergeFraction = 1e-3;

// Appends coordinates from `lo` toward `hi` with the local step
// base/(1+kappa), clamping the last point onto `hi`.
std::vector<double> walk_axis(double lo, double hi, double base,
                              const std::function<double(double)>& kappa_at) {
    std::vector<double> out{lo};
    double v = lo;
    for (;;) {
        const double k = kappa_at(v);
        if (!std::isfinite(k) || k < 0.0)
            throw ConfigError("density weight must be finite and nonnegative");
        const double step = base / (1.0 + k);
        const double next = v + step;
        if (!(next > v)) throw ConfigError("vertex step collapsed to zero");
        if (next < hi) {
            out.push_back(next);
            v = next;
        } else {
            if (hi - v < kMergeFraction * step)
                out.back() = hi;
            else
                out.push_back(hi);
            break;
        }
        if (out.size() > kMaxVertices) throw ConfigError("vertex walk did not terminate");
    }
    return out;
}

} // namespace

std::vector<Point2> generate_vertices(const Domain2& dom, int d, const DensityFn& kappa) {
    dom.validate();
    if (d < 1) throw ConfigError("mesh subdivision d must be >= 1");
    const double base =
        std::hypot(dom.y_max - dom.y_min, dom.z_max - dom.z_min) / d;

    const std::vector<double> ys = walk_axis(
        dom.y_min, dom.y_max, base, [&](double y) { return kappa(y, dom.z_min); });

    std::vector<Point2> points;
    for (double y : ys) {
        const std::vector<double> zs = walk_axis(
            dom.z_min, dom.z_max, base, [&](double z) { return kappa(y, z); });
        for (double z : zs) points.push_back({y, z});
        if (points.size() > kMaxVertices) throw ConfigError("vertex set too large");
    }
    return points;
}

namespace {

struct Face {
    std::array<int, 3> v;
    bool alive = true;
};

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

class Builder {
public:
    explicit Builder(const std::vector<Point2>& input) : pts_(input), n_(input.size()) {
        double ylo = std::numeric_limits<double>::infinity(), yhi = -ylo;
        double zlo = ylo, zhi = -ylo;
        for (const Point2& p : pts_) {
            ylo = std::min(ylo, p.y); yhi = std::max(yhi, p.y);
            zlo = std::min(zlo, p.z); zhi = std::max(zhi, p.z);
        }
        const double cy = 0.5 * (ylo + yhi), cz = 0.5 * (zlo + zhi);
        const double r = 65536.0 * (std::max({yhi - ylo, zhi - zlo, 1.0}));
        pts_.push_back({cy - 2.0 * r, cz - r});
        pts_.push_back({cy + 2.0 * r, cz - r});
        pts_.push_back({cy, cz + 2.0 * r});
        add_face(int(n_), int(n_ + 1), int(n_ + 2));
    }

    void insert(int p) {
        const int seed = locate(p);
        // Cavity: faces whose open circumdisk contains p, grown from the seed.
        std::vector<int> bad;
        std::vector<int> stack{seed};
        std::unordered_set<int> seen{seed};
        if (in_circle(pt(seed, 0), pt(seed, 1), pt(seed, 2), pts_[p]) <= 0)
            throw DegenerateInput("duplicate vertex in triangulation input");
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            bad.push_back(f);
            for (int e = 0; e < 3; ++e) {
                const int g = neighbor(f, e);
                if (g < 0 || seen.count(g)) continue;
                if (in_circle(pt(g, 0), pt(g, 1), pt(g, 2), pts_[p]) > 0) {
                    seen.insert(g);
                    stack.push_back(g);
                }
            }
        }
        // Boundary of the cavity, directed with the cavity on the left.
        std::vector<std::pair<int, int>> border;
        for (int f : bad) {
            for (int e = 0; e < 3; ++e) {
                const int g = neighbor(f, e);
                if (g < 0 || !seen.count(g))
                    border.emplace_back(faces_[f].v[e], faces_[f].v[(e + 1) % 3]);
            }
        }
        for (int f : bad) remove_face(f);
        for (auto [u, w] : border) last_ = add_face(u, w, p);
    }

    PlanarMesh finish() {
        PlanarMesh mesh;
        mesh.vertices = std::vector<Point2>(pts_.begin(), pts_.begin() + n_);
        for (const Face& f : faces_) {
            if (!f.alive) continue;
            if (f.v[0] >= int(n_) || f.v[1] >= int(n_) || f.v[2] >= int(n_)) continue;
            mesh.faces.push_back(f.v);
        }
        if (mesh.faces.empty())
            throw DegenerateInput("triangulation needs at least 3 non-collinear points");
        mesh.star.resize(n_);
        for (int fi = 0; fi < mesh.face_count(); ++fi)
            for (int k = 0; k < 3; ++k) mesh.star[mesh.faces[fi][k]].push_back(fi);
        for (auto& s : mesh.star) std::sort(s.begin(), s.end());
        return mesh;
    }

private:
    const Point2& pt(int f, int corner) const { return pts_[faces_[f].v[corner]]; }

    int add_face(int a, int b, int c) {
        const int id = int(faces_.size());
        faces_.push_back({{a, b, c}, true});
        link(a, b, id); link(b, c, id); link(c, a, id);
        return id;
    }

    void remove_face(int f) {
        const auto& v = faces_[f].v;
        unlink(v[0], v[1], f); unlink(v[1], v[2], f); unlink(v[2], v[0], f);
        faces_[f].alive = false;
    }

    void link(int a, int b, int f) {
        auto& slot =
            edges_.try_emplace(edge_key(a, b), std::pair<int, int>{-1, -1}).first->second;
        (slot.first < 0 ? slot.first : slot.second) = f;
    }

    void unlink(int a, int b, int f) {
        const auto it = edges_.find(edge_key(a, b));
        if (it->second.first == f) it->second.first = it->second.second;
        it->second.second = -1;
        if (it->second.first < 0) edges_.erase(it);
    }

    int neighbor(int f, int e) const {
        const int a = faces_[f].v[e], b = faces_[f].v[(e + 1) % 3];
        const auto it = edges_.find(edge_key(a, b));
        if (it == edges_.end()) return -1;
        return it->second.first == f ? it->second.second : it->second.first;
    }

    // Visibility walk from the last created face; falls back to a full scan if
    // the walk exceeds its step budget.
    int locate(int p) const {
        int f = last_;
        std::size_t steps = 4 * faces_.size() + 64;
        while (steps--) {
            if (!faces_[f].alive) break;
            bool moved = false;
            for (int e = 0; e < 3; ++e) {
                const int a = faces_[f].v[e], b = faces_[f].v[(e + 1) % 3];
                if (orient2d(pts_[a], pts_[b], pts_[p]) < 0) {
                    const int g = neighbor(f, e);
                    if (g >= 0) {
                        f = g;
                        moved = true;
                        break;
                    }
                }
            }
            if (!moved) return f;
        }
        for (int g = int(faces_.size()) - 1; g >= 0; --g) {
            if (!faces_[g].alive) continue;
            bool inside = true;
            for (int e = 0; e < 3 && inside; ++e)
                inside = orient2d(pts_[faces_[g].v[e]], pts_[faces_[g].v[(e + 1) % 3]],
                                  pts_[p]) >= 0;
            if (inside) return g;
        }
        throw DegenerateInput("point location failed");
    }

    std::vector<Point2> pts_;
    std::size_t n_;
    std::vector<Face> faces_;
    std::unordered_map<std::uint64_t, std::pair<int, int>> edges_;
    int last_ = 0;
};

} // namespace

PlanarMesh triangulate(const std::vector<Point2>& points) {
    if (points.size() < 3)
        throw DegenerateInput("triangulation needs at least 3 non-collinear points");
    Builder builder(points);
    for (int i = 0; i < int(points.size()); ++i) builder.insert(i);
    return builder.finish();
}

int PlanarMesh::edge_count() const {
    std::unordered_set<std::uint64_t> edges;
    for (const auto& f : faces) {
        edges.insert(edge_key(f[0], f[1]));
        edges.insert(edge_key(f[1], f[2]));
        edges.insert(edge_key(f[2], f[0]));
    }
    return int(edges.size());
}

LiftedSurface lift(std::shared_ptr<const PlanarMesh> mesh, const HeightMapFn& height) {
    LiftedSurface s;
    s.fast.reserve(mesh->vertices.size());
    for (const Point2& p : mesh->vertices) s.fast.push_back(height(p.y, p.z));
    s.mesh = std::move(mesh);
    return s;
}

} // namespace smenc
