#include "smenc/diagnostics.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace smenc {

SlopeBound relative_slope(const SlowFastSystem& sys, const EnclosurePair& pair) {
    pair.validate();
    const PlanarMesh& mesh = *pair.mesh;
    double upper = 0.0;
    for (int fi = 0; fi < mesh.face_count(); ++fi) {
        const auto& f = mesh.faces[fi];
        const Point2& p1 = mesh.vertices[f[0]];
        const Point2& p2 = mesh.vertices[f[1]];
        const Point2& p3 = mesh.vertices[f[2]];
        const Interval y = hull(Interval(p1.y), Interval(p2.y), Interval(p3.y));
        const Interval z = hull(Interval(p1.z), Interval(p2.z), Interval(p3.z));
        const double xlo =
            std::min({pair.x_left[f[0]], pair.x_left[f[1]], pair.x_left[f[2]]});
        const double xhi =
            std::max({pair.x_right[f[0]], pair.x_right[f[1]], pair.x_right[f[2]]});
        const IntervalVec3 box{Interval(xlo, xhi), y, z};

        const IntervalVec3 F = sys.flow(box);
        const Interval slow_speed = abs(F.y) + abs(F.z);
        if (slow_speed.contains_zero())
            throw DomainError("slow speed straddles zero on face " +
                              std::to_string(fi));
        auto [gy, gz] = sys.critical_gradient(y, z);
        const Interval sheet_slope = abs(gy) + abs(gz);
        if (sheet_slope.contains_zero())
            throw DomainError("sheet slope straddles zero on face " +
                              std::to_string(fi));
        const Interval ratio = (abs(F.x) / slow_speed) / sheet_slope;
        upper = std::max(upper, ratio.hi);
    }
    const bool ok = (Interval(upper) * sqrt(Interval(sys.epsilon()))).hi <= 1.0;
    return {upper, ok};
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points,
                        double window_lo, double window_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [x, y] : points) {
        if (x < window_lo || x > window_hi) continue;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw InsufficientData("slope fit needs at least 2 points in window");
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw InsufficientData("slope fit abscissas coincide");
    return (n * sxy - sx * sy) / denom;
}

std::vector<double> default_epsilon_grid() {
    std::vector<double> eps;
    for (double e = 1.0; e <= 5.0 + 1e-12; e += 0.5) eps.push_back(std::pow(10.0, -e));
    return eps;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

RunResult run_single(const SlowFastSystem& sys,
                     std::shared_ptr<const PlanarMesh> mesh, double N0,
                     bool tighten_enabled, double update_factor, int max_passes) {
    RunResult r;
    r.record.epsilon = sys.epsilon();
    r.record.iota = mesh->vertex_count();

    const auto t_verify0 = std::chrono::steady_clock::now();
    const LiftedSurface critical =
        lift(mesh, [&](double y, double z) { return sys.critical_height_mid(y, z); });
    const LiftedSurface approx = build_approximation(critical, sys);
    r.pair = verify_pair(sys, approx, N0);
    r.record.t_verify = seconds_since(t_verify0);
    r.record.verified = true;
    r.record.verified_N = r.pair.shift_divisor;
    r.record.eta_initial = rms_gap(r.pair);

    if (tighten_enabled) {
        const auto t_tighten0 = std::chrono::steady_clock::now();
        TightenResult t = tighten(sys, r.pair, update_factor, max_passes);
        r.record.t_tighten = seconds_since(t_tighten0);
        r.record.passes = t.passes;
        r.eta_history = std::move(t.eta_history);
    } else {
        r.eta_history = {r.record.eta_initial};
    }
    r.record.eta_final = rms_gap(r.pair);

    const SlopeBound s = relative_slope(sys, r.pair);
    r.record.s_eps_hi = s.upper;
    r.record.criterion_ok = s.criterion_ok;
    return r;
}

std::vector<SweepRecord> sweep(const SweepSettings& settings) {
    if (settings.epsilons.empty()) throw ConfigError("sweep requires a nonempty epsilon list");
    if (!settings.make_system) throw ConfigError("sweep requires a system factory");

    const auto t_mesh0 = std::chrono::steady_clock::now();
    const auto sys0 = settings.make_system(settings.epsilons.front());
    sys0->require_normally_hyperbolic(settings.domain);
    const auto mesh = std::make_shared<const PlanarMesh>(
        triangulate(generate_vertices(settings.domain, settings.d, [&](double y, double z) {
            return sys0->gradient_norm_mid(y, z);
        })));
    const double t_mesh = seconds_since(t_mesh0);

    std::vector<SweepRecord> records(settings.epsilons.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= settings.epsilons.size()) return;
            const double eps = settings.epsilons[k];
            SweepRecord& rec = records[k];
            try {
                const auto sys = settings.make_system(eps);
                sys->require_normally_hyperbolic(settings.domain);
                RunResult r =
                    run_single(*sys, mesh, settings.N0, settings.tighten_enabled,
                               settings.update_factor, settings.max_passes);
                rec = std::move(r.record);
            } catch (const Error& e) {
                rec.epsilon = eps;
                rec.iota = mesh->vertex_count();
                rec.verified = false;
                rec.error = e.what();
                rec.eta_initial = rec.eta_final = rec.s_eps_hi =
                    std::numeric_limits<double>::quiet_NaN();
            }
        }
    };

    const int threads = std::max(1, std::min<int>(settings.threads,
                                                  int(settings.epsilons.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    records.front().t_mesh = t_mesh;
    return records;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "epsilon,iota,eta_initial,eta_final,verified_N,s_eps_hi,criterion_ok,"
           "passes,t_mesh,t_verify,t_tighten\n";
    char line[512];
    for (const SweepRecord& r : records) {
        std::snprintf(line, sizeof line,
                      "%.17g,%d,%.17g,%.17g,%.17g,%.17g,%d,%d,%.6g,%.6g,%.6g\n",
                      r.epsilon, r.iota, r.eta_initial, r.eta_final, r.verified_N,
                      r.s_eps_hi, r.criterion_ok ? 1 : 0, r.passes, r.t_mesh,
                      r.t_verify, r.t_tighten);
        out << line;
    }
}

double sweep_slope(const std::vector<SweepRecord>& records, double window_lo,
                   double window_hi) {
    std::vector<std::pair<double, double>> pts;
    for (const SweepRecord& r : records)
        if (r.verified && r.eta_final > 0.0)
            pts.emplace_back(-std::log10(r.epsilon), std::log10(r.eta_final));
    return fit_loglog_slope(pts, window_lo, window_hi);
}

} // namespace smenc
