#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "smenc/tighten.hpp"

namespace smenc {

/// Rigorous upper bound for the relative slope of trajectories inside the
/// enclosed slab: max over faces of
///
///     ( |dx/dt| / (|dy/dt| + |dz/dt|) ) / ( |d_y h| + |d_z h| )
///
/// evaluated on the box spanning [x_left, x_right] over each face's slow-plane
/// hull.  `criterion_ok` is the verified inequality  bound * sqrt(eps) <= 1,
/// the slowness certificate.
struct SlopeBound {
    double upper;
    bool criterion_ok;
};

SlopeBound relative_slope(const SlowFastSystem& sys, const EnclosurePair& pair);

/// Ordinary least-squares slope of log10(eta) against -log10(eps), restricted
/// to points whose abscissa lies in [window_lo, window_hi].  Throws
/// InsufficientData with fewer than two points in the window.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points,
                        double window_lo, double window_hi);

/// -log10(eps) in {1.0, 1.5, ..., 5.0}.
std::vector<double> default_epsilon_grid();

using SystemFactory =
    std::function<std::shared_ptr<const SlowFastSystem>(double eps)>;

struct SweepSettings {
    SystemFactory make_system;
    Domain2 domain{};
    int d = 8;
    std::vector<double> epsilons;
    double N0 = 64.0;
    double update_factor = 0.125;
    bool tighten_enabled = true;
    int max_passes = 10000;
    int threads = 1;
};

struct SweepRecord {
    double epsilon = 0.0;
    int iota = 0;
    double eta_initial = 0.0;
    double eta_final = 0.0;
    double verified_N = 0.0;
    double s_eps_hi = 0.0;
    bool criterion_ok = false;
    int passes = 0;
    double t_mesh = 0.0;
    double t_verify = 0.0;
    double t_tighten = 0.0;
    bool verified = false;
    std::string error;
};

/// Per-epsilon pipeline on a prebuilt mesh: lift, first-order correction,
/// verification, optional tightening, diagnostics.  Mesh time is charged by
/// the caller.
struct RunResult {
    EnclosurePair pair;
    SweepRecord record;
    std::vector<double> eta_history;
};

RunResult run_single(const SlowFastSystem& sys,
                     std::shared_ptr<const PlanarMesh> mesh, double N0,
                     bool tighten_enabled, double update_factor, int max_passes);

/// Runs the pipeline for every epsilon on one shared mesh.  Epsilon points are
/// independent and may run on `threads` workers; records come back in epsilon
/// list order.  A verification failure is recorded in its row and the sweep
/// continues.
std::vector<SweepRecord> sweep(const SweepSettings& settings);

/// Fixed-schema CSV:
/// epsilon,iota,eta_initial,eta_final,verified_N,s_eps_hi,criterion_ok,passes,t_mesh,t_verify,t_tighten
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

/// Least-squares slope over the sweep's (-log10 eps, log10 eta_final) points.
double sweep_slope(const std::vector<SweepRecord>& records, double window_lo,
                   double window_hi);

} // namespace smenc
