#include "smenc/enclosure.hpp"

#include <cmath>

namespace smenc {

LiftedSurface build_approximation(const LiftedSurface& critical,
                                  const SlowFastSystem& sys) {
    LiftedSurface out;
    out.mesh = critical.mesh;
    out.fast.reserve(critical.fast.size());
    const double eps = sys.epsilon();
    for (int i = 0; i < critical.mesh->vertex_count(); ++i) {
        const Point2& p = critical.mesh->vertices[i];
        const double h1 = sys.slow_correction(Interval(p.y), Interval(p.z)).mid();
        out.fast.push_back(critical.fast[i] + eps * h1);
    }
    return out;
}

LiftedSurface shift_along_fast(const LiftedSurface& surface, double c,
                               const SlowFastSystem& sys) {
    if (c == 0.0 || !std::isfinite(c)) throw ConfigError("shift requires c != 0");
    LiftedSurface out;
    out.mesh = surface.mesh;
    out.fast.reserve(surface.fast.size());
    const double eps = sys.epsilon();
    const double floor = eps * eps / std::fabs(c);
    for (int i = 0; i < surface.mesh->vertex_count(); ++i) {
        const Point2& p = surface.mesh->vertices[i];
        const double h1 = sys.slow_correction(Interval(p.y), Interval(p.z)).mag();
        out.fast.push_back(surface.fast[i] + c * std::max(h1, floor));
    }
    return out;
}

EnclosurePair build_pair(const LiftedSurface& approx, const SlowFastSystem& sys,
                         double N) {
    if (!(N > 0.0) || !std::isfinite(N))
        throw ConfigError("shift divisor N must be positive");
    const double c = sys.epsilon() / N;
    EnclosurePair pair;
    pair.mesh = approx.mesh;
    pair.x_left = shift_along_fast(approx, -c, sys).fast;
    pair.x_right = shift_along_fast(approx, c, sys).fast;
    pair.epsilon = sys.epsilon();
    pair.shift_divisor = N;
    pair.validate();
    return pair;
}

double rms_gap(const EnclosurePair& pair) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pair.x_left.size(); ++i) {
        const double g = pair.x_right[i] - pair.x_left[i];
        sum += g * g;
    }
    return std::sqrt(sum / double(pair.x_left.size()));
}

} // namespace smenc
