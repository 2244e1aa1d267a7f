#pragma once

#include "smenc/mesh.hpp"
#include "smenc/system.hpp"

namespace smenc {

/// Two graph surfaces over a shared mesh bracketing a slow manifold:
/// x_left[i] < x_right[i] at every vertex.  `shift_divisor` records the N
/// used to build (and, after verification, verify) the pair.
struct EnclosurePair {
    std::shared_ptr<const PlanarMesh> mesh;
    std::vector<double> x_left;
    std::vector<double> x_right;
    double epsilon = 0.0;
    double shift_divisor = 0.0;

    LiftedSurface left() const { return {mesh, x_left}; }
    LiftedSurface right() const { return {mesh, x_right}; }

    void validate() const {
        if (!mesh || x_left.size() != mesh->vertices.size() ||
            x_right.size() != mesh->vertices.size())
            throw ConfigError("enclosure pair arrays do not match the mesh");
        for (std::size_t i = 0; i < x_left.size(); ++i)
            if (!(x_left[i] < x_right[i]))
                throw ConfigError("enclosure bracket violated at vertex " +
                                  std::to_string(i));
    }
};

/// First-order approximate slow manifold: adds epsilon times the midpoint of
/// the correction enclosure to each vertex height.  Placement is non-rigorous;
/// rigor is restored by the transversality verification.
LiftedSurface build_approximation(const LiftedSurface& critical, const SlowFastSystem& sys);

/// Moves every vertex along the fast axis by c * max(|correction|, eps^2/|c|).
/// The floor term guarantees a shift of magnitude at least eps^2 where the
/// correction vanishes.  |correction| is the magnitude bound of its enclosure.
LiftedSurface shift_along_fast(const LiftedSurface& surface, double c,
                               const SlowFastSystem& sys);

/// Left/right candidate surfaces from shifts with c = -eps/N and c = +eps/N.
/// The enclosed slab is disjoint from the critical manifold where the floor is
/// inactive and N > 1; the pair is built for any N > 0 so the verification
/// loop can widen it freely.
EnclosurePair build_pair(const LiftedSurface& approx, const SlowFastSystem& sys,
                         double N);

/// Tightness metric: root-mean-square of the per-vertex gaps
/// x_right[i] - x_left[i].
double rms_gap(const EnclosurePair& pair);

} // namespace smenc
