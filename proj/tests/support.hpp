#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "smenc/config.hpp"
#include "smenc/diagnostics.hpp"

namespace smenc::testing {

/// Uniform double in [lo, hi].
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random interval with endpoints drawn from [lo, hi].
inline Interval random_interval(std::mt19937_64& rng, double lo, double hi) {
    double a = uniform(rng, lo, hi);
    double b = uniform(rng, lo, hi);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

/// The reference experimental setup: singular Hopf, rescaled parameters
/// (mu, A, B, C) = (0.01, -0.05, 0.001, 0.1), attracting sheet over the strip
/// y in [0.01, 0.2], z in [-0.01, 0.01].
inline RescaledHopfParams reference_params() { return {0.01, -0.05, 0.001, 0.1}; }

inline Domain2 strip_domain() { return {0.01, 0.2, -0.01, 0.01}; }

inline std::shared_ptr<const SingularHopf> reference_system(double eps) {
    return std::make_shared<const SingularHopf>(eps, reference_params(), Branch::Plus);
}

inline SystemFactory reference_factory() {
    return [](double eps) -> std::shared_ptr<const SlowFastSystem> {
        return reference_system(eps);
    };
}

/// Attracting layer field f = -x, g = 0: the slab around {x = 0} is enclosed
/// for any bracket with x_left < 0 < x_right, and every tightening move that
/// keeps the bracket around zero is accepted.  Used to exercise the tightening
/// loop in isolation.
inline std::shared_ptr<const CallableSystem> layer_system(double eps = 1.0) {
    CallableSystem::Definition d;
    auto zero = [](const Interval&, const Interval&, const Interval&) {
        return Interval(0.0);
    };
    d.f = [](const Interval& x, const Interval&, const Interval&) { return -x; };
    d.g_y = zero;
    d.g_z = zero;
    d.df_dx = [](const Interval&, const Interval&, const Interval&) {
        return Interval(-1.0);
    };
    d.df_dy = zero;
    d.df_dz = zero;
    d.dgy_dx = zero;
    d.dgy_dy = zero;
    d.dgy_dz = zero;
    d.dgz_dx = zero;
    d.dgz_dy = zero;
    d.dgz_dz = zero;
    d.height = [](const Interval&, const Interval&) { return Interval(0.0); };
    return std::make_shared<const CallableSystem>(eps, std::move(d));
}

/// Constant flow F = (fx, fy, fz) (with eps = 1, so f = fx).
inline std::shared_ptr<const CallableSystem> constant_system(double fx, double fy,
                                                             double fz) {
    CallableSystem::Definition d;
    auto zero = [](const Interval&, const Interval&, const Interval&) {
        return Interval(0.0);
    };
    auto constant = [](double v) {
        return [v](const Interval&, const Interval&, const Interval&) {
            return Interval(v);
        };
    };
    d.f = constant(fx);
    d.g_y = constant(fy);
    d.g_z = constant(fz);
    d.df_dx = zero; d.df_dy = zero; d.df_dz = zero;
    d.dgy_dx = zero; d.dgy_dy = zero; d.dgy_dz = zero;
    d.dgz_dx = zero; d.dgz_dy = zero; d.dgz_dz = zero;
    d.height = [](const Interval&, const Interval&) { return Interval(0.0); };
    return std::make_shared<const CallableSystem>(1.0, std::move(d));
}

/// The singular Hopf definition routed through the generic-callable pathway;
/// used to cross-check hand-coded closed forms against the quotient formulas.
inline std::shared_ptr<const CallableSystem> hopf_as_callables(double eps,
                                                               SingularHopfParams p,
                                                               Branch branch) {
    CallableSystem::Definition d;
    auto zero = [](const Interval&, const Interval&, const Interval&) {
        return Interval(0.0);
    };
    d.f = [](const Interval& x, const Interval& y, const Interval&) {
        return y - square(x);
    };
    d.g_y = [](const Interval& x, const Interval&, const Interval& z) { return z - x; };
    d.g_z = [p](const Interval& x, const Interval& y, const Interval& z) {
        return -(scale(x, p.a) + scale(y, p.b) + scale(z, p.c) + Interval(p.mu));
    };
    d.df_dx = [](const Interval& x, const Interval&, const Interval&) {
        return scale(x, -2.0);
    };
    d.df_dy = [](const Interval&, const Interval&, const Interval&) {
        return Interval(1.0);
    };
    d.df_dz = zero;
    d.dgy_dx = [](const Interval&, const Interval&, const Interval&) {
        return Interval(-1.0);
    };
    d.dgy_dy = zero;
    d.dgy_dz = [](const Interval&, const Interval&, const Interval&) {
        return Interval(1.0);
    };
    d.dgz_dx = [p](const Interval&, const Interval&, const Interval&) {
        return Interval(-p.a);
    };
    d.dgz_dy = [p](const Interval&, const Interval&, const Interval&) {
        return Interval(-p.b);
    };
    d.dgz_dz = [p](const Interval&, const Interval&, const Interval&) {
        return Interval(-p.c);
    };
    d.height = [branch](const Interval& y, const Interval&) {
        const Interval r = sqrt(y);
        return branch == Branch::Plus ? r : -r;
    };
    return std::make_shared<const CallableSystem>(eps, std::move(d));
}

/// Small shared mesh over the strip (deterministic).
inline std::shared_ptr<const PlanarMesh> strip_mesh(int d) {
    auto sys = reference_system(1e-3);
    return std::make_shared<const PlanarMesh>(
        triangulate(generate_vertices(strip_domain(), d, [&](double y, double z) {
            return sys->gradient_norm_mid(y, z);
        })));
}

} // namespace smenc::testing
