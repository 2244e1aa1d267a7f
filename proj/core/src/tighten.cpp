#include "smenc/tighten.hpp"

namespace smenc {

bool try_move_vertex(const SlowFastSystem& sys, EnclosurePair& pair, int i,
                     Side side, double factor) {
    if (i < 0 || i >= pair.mesh->vertex_count())
        throw IndexError("vertex index out of range");
    if (!(factor > 0.0 && factor < 0.5))
        throw ConfigError("update factor must lie in (0, 1/2)");

    const std::vector<int>& star = pair.mesh->star[i];
    const double gap = pair.x_right[i] - pair.x_left[i];
    double& coord = (side == Side::Left) ? pair.x_left[i] : pair.x_right[i];
    const double saved = coord;
    coord = (side == Side::Left) ? saved + factor * gap : saved - factor * gap;

    const bool ok =
        faces_uniform(sys, SurfaceView(*pair.mesh, pair.x_left.data()), star, 1) &&
        faces_uniform(sys, SurfaceView(*pair.mesh, pair.x_right.data()), star, -1);
    if (!ok) {
        coord = saved;
        return false;
    }
    return true;
}

int tighten_pass(const SlowFastSystem& sys, EnclosurePair& pair, double factor) {
    int committed = 0;
    const int n = pair.mesh->vertex_count();
    for (int i = 0; i < n; ++i) {
        if (try_move_vertex(sys, pair, i, Side::Left, factor)) ++committed;
        if (try_move_vertex(sys, pair, i, Side::Right, factor)) ++committed;
    }
    return committed;
}

TightenResult tighten(const SlowFastSystem& sys, EnclosurePair& pair, double factor,
                      int max_passes) {
    if (max_passes < 1) throw ConfigError("max_passes must be >= 1");
    TightenResult result;
    result.eta_history.push_back(rms_gap(pair));
    while (result.passes < max_passes) {
        tighten_pass(sys, pair, factor);
        ++result.passes;
        const double eta = rms_gap(pair);
        result.eta_history.push_back(eta);
        if (!(eta < result.eta_history[result.passes - 1])) break;
    }
    return result;
}

} // namespace smenc
