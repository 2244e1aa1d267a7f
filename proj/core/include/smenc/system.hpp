#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "smenc/interval.hpp"
#include "smenc/vec.hpp"

namespace smenc {

/// Rectangle of slow variables over which a sheet of the critical manifold is
/// enclosed.
struct Domain2 {
    double y_min;
    double y_max;
    double z_min;
    double z_max;

    void validate() const {
        if (!(y_min < y_max) || !(z_min < z_max))
            throw ConfigError("domain bounds out of order");
        if (!std::isfinite(y_min) || !std::isfinite(y_max) ||
            !std::isfinite(z_min) || !std::isfinite(z_max))
            throw ConfigError("domain bounds not finite");
    }

    Interval y() const { return Interval(y_min, y_max); }
    Interval z() const { return Interval(z_min, z_max); }
};

enum class Branch { Plus, Minus };

/// A slow-fast vector field with one fast variable x and two slow variables
/// (y, z):
///
///     eps * dx/dt = f(x,y,z),   dy/dt = g_y(x,y,z),   dz/dt = g_z(x,y,z).
///
/// All evaluations are interval enclosures and safe for concurrent use; a
/// system is immutable after construction.
class SlowFastSystem {
public:
    virtual ~SlowFastSystem() = default;

    double epsilon() const { return eps_; }

    /// Vector field of the flow, F = (f/eps, g_y, g_z), enclosed over a box.
    /// The fast component carries the 1/eps factor.
    virtual IntervalVec3 flow(const IntervalVec3& box) const = 0;

    /// Gradient with respect to (x,y,z) of F·n, enclosed over a box.
    virtual IntervalVec3 flux_gradient(const IntervalVec3& box,
                                       const IntervalVec3& n) const = 0;

    /// Enclosure of F·n along the segment from a to b.  The default encloses
    /// the segment by its axis-aligned box; systems can tighten this by
    /// exploiting the segment parametrization.
    virtual Interval flux_on_edge(const Vec3& a, const Vec3& b,
                                  const IntervalVec3& n) const {
        return dot(flow(IntervalVec3::segment(a, b)), n);
    }

    /// Height of the configured critical-manifold sheet over (y,z).
    virtual Interval critical_height(const Interval& y, const Interval& z) const = 0;

    /// Slow-plane gradient of the sheet height.
    virtual std::pair<Interval, Interval>
    critical_gradient(const Interval& y, const Interval& z) const = 0;

    /// First-order correction term of the slow-manifold height expansion.
    virtual Interval slow_correction(const Interval& y, const Interval& z) const = 0;

    /// Checks that the fast partial of f is bounded away from zero over the
    /// sheet above `dom`; throws FoldError otherwise.
    virtual void require_normally_hyperbolic(const Domain2& dom) const = 0;

    /// Non-rigorous midpoint height, used to place mesh scaffolding.
    double critical_height_mid(double y, double z) const {
        return critical_height(Interval(y), Interval(z)).mid();
    }

    /// ‖ slow gradient of the sheet height ‖ at a machine point; the mesh
    /// density weight.
    double gradient_norm_mid(double y, double z) const {
        auto [gy, gz] = critical_gradient(Interval(y), Interval(z));
        return std::hypot(gy.mid(), gz.mid());
    }

protected:
    explicit SlowFastSystem(double eps) : eps_(eps) {
        if (!(eps > 0.0) || !std::isfinite(eps))
            throw ConfigError("epsilon must be positive and finite");
    }

    double eps_;
};

/// Parameters of the singular Hopf normal form in original coordinates.
struct SingularHopfParams {
    double mu;
    double a;
    double b;
    double c;
};

/// Parameters in the eps-rescaled coordinates.
struct RescaledHopfParams {
    double mu;
    double A;
    double B;
    double C;
};

SingularHopfParams to_original(const RescaledHopfParams& p, double eps);
RescaledHopfParams to_rescaled(const SingularHopfParams& p, double eps);

/// The singular Hopf normal form
///
///     eps * dx/dt = y - x^2
///           dy/dt = z - x
///           dz/dt = -mu - a x - b y - c z
///
/// with the critical manifold {y = x^2} and branch heights ±sqrt(y).
/// Partials and the correction term are hand-coded closed forms.
class SingularHopf final : public SlowFastSystem {
public:
    SingularHopf(double eps, const SingularHopfParams& params, Branch branch)
        : SlowFastSystem(eps), p_(params), branch_(branch) {}

    SingularHopf(double eps, const RescaledHopfParams& params, Branch branch)
        : SingularHopf(eps, to_original(params, eps), branch) {}

    const SingularHopfParams& params() const { return p_; }
    Branch branch() const { return branch_; }

    IntervalVec3 flow(const IntervalVec3& box) const override;
    IntervalVec3 flux_gradient(const IntervalVec3& box,
                               const IntervalVec3& n) const override;
    Interval flux_on_edge(const Vec3& a, const Vec3& b,
                          const IntervalVec3& n) const override;
    Interval critical_height(const Interval& y, const Interval& z) const override;
    std::pair<Interval, Interval>
    critical_gradient(const Interval& y, const Interval& z) const override;
    Interval slow_correction(const Interval& y, const Interval& z) const override;
    void require_normally_hyperbolic(const Domain2& dom) const override;

private:
    Interval checked_y(const Interval& y) const;

    SingularHopfParams p_;
    Branch branch_;
};

/// Interval-evaluable scalar function of a phase-space box.
using FieldFn = std::function<Interval(const Interval& x, const Interval& y,
                                       const Interval& z)>;
/// Interval-evaluable height function over the slow plane.
using HeightFn = std::function<Interval(const Interval& y, const Interval& z)>;

/// A slow-fast system supplied as interval-evaluable callables: f, g_y, g_z,
/// their nine first partials, and the sheet height.  The sheet gradient and
/// correction term are derived through the implicit-function quotients
///
///     d_y h = -d_y f / d_x f,    correction = -(d_y f g_y + d_z f g_z) / (d_x f)^2,
///
/// everything evaluated on the sheet.  No symbolic differentiation.
class CallableSystem final : public SlowFastSystem {
public:
    struct Definition {
        FieldFn f, g_y, g_z;
        FieldFn df_dx, df_dy, df_dz;
        FieldFn dgy_dx, dgy_dy, dgy_dz;
        FieldFn dgz_dx, dgz_dy, dgz_dz;
        HeightFn height;
    };

    CallableSystem(double eps, Definition def)
        : SlowFastSystem(eps), d_(std::move(def)) {}

    IntervalVec3 flow(const IntervalVec3& box) const override;
    IntervalVec3 flux_gradient(const IntervalVec3& box,
                               const IntervalVec3& n) const override;
    Interval critical_height(const Interval& y, const Interval& z) const override;
    std::pair<Interval, Interval>
    critical_gradient(const Interval& y, const Interval& z) const override;
    Interval slow_correction(const Interval& y, const Interval& z) const override;
    void require_normally_hyperbolic(const Domain2& dom) const override;

private:
    Interval fast_partial_on_sheet(const Interval& y, const Interval& z,
                                   Interval* height_out = nullptr) const;

    Definition d_;
};

} // namespace smenc
