#pragma once

#include <vector>

#include "smenc/transversality.hpp"

namespace smenc {

enum class Side { Left, Right };

/// Tentatively moves one vertex of the chosen surface toward the other by
/// factor * gap, re-checks transversality of both surfaces on the faces
/// around that vertex (left must stay uniformly +1, right uniformly -1), and
/// commits on success.  On failure the pair is left bit-identical.  Requires
/// 0 < factor < 1/2.
bool try_move_vertex(const SlowFastSystem& sys, EnclosurePair& pair, int i,
                     Side side, double factor);

/// One sweep over all vertices in ascending index order, attempting a left
/// then a right move at each.  Returns the number of committed moves.  The
/// pair stays verified after every commit.
int tighten_pass(const SlowFastSystem& sys, EnclosurePair& pair, double factor);

struct TightenResult {
    int passes = 0;
    /// RMS gap before any pass, then after each pass.
    std::vector<double> eta_history;
};

/// Repeats passes while the RMS gap strictly decreases, stopping at the first
/// pass with no improvement or at max_passes.  Visit order is fixed, so the
/// result is deterministic.
TightenResult tighten(const SlowFastSystem& sys, EnclosurePair& pair,
                      double factor = 0.125, int max_passes = 10000);

} // namespace smenc
