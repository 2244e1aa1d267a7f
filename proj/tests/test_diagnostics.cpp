#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "smenc/diagnostics.hpp"
#include "support.hpp"

using namespace smenc;
using namespace smenc::testing;

namespace {

// f = y - x with slow drift (-1, 0): the sheet is {x = y} and the exact slow
// graph is {x = y + eps}, along which dx/dt = -1.
std::shared_ptr<const CallableSystem> linear_toy(double eps) {
    CallableSystem::Definition d;
    auto zero = [](const Interval&, const Interval&, const Interval&) {
        return Interval(0.0);
    };
    auto constant = [](double v) {
        return [v](const Interval&, const Interval&, const Interval&) {
            return Interval(v);
        };
    };
    d.f = [](const Interval& x, const Interval& y, const Interval&) { return y - x; };
    d.g_y = constant(-1.0);
    d.g_z = zero;
    d.df_dx = constant(-1.0);
    d.df_dy = constant(1.0);
    d.df_dz = zero;
    d.dgy_dx = zero; d.dgy_dy = zero; d.dgy_dz = zero;
    d.dgz_dx = zero; d.dgz_dy = zero; d.dgz_dz = zero;
    d.height = [](const Interval& y, const Interval&) { return y; };
    return std::make_shared<const CallableSystem>(eps, std::move(d));
}

EnclosurePair toy_pair(double eps, double half_gap, double extent = 1.0,
                       int grid = 1) {
    std::vector<Point2> pts;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j)
            pts.push_back({extent * i / grid, extent * j / grid});
    EnclosurePair pair;
    pair.mesh = std::make_shared<const PlanarMesh>(triangulate(pts));
    pair.epsilon = eps;
    pair.shift_divisor = 1.0;
    for (const Point2& p : pair.mesh->vertices) {
        pair.x_left.push_back(p.y + eps - half_gap);
        pair.x_right.push_back(p.y + eps + half_gap);
    }
    return pair;
}

SweepSettings strip_settings(int d, std::vector<double> eps_list) {
    SweepSettings s;
    s.make_system = reference_factory();
    s.domain = strip_domain();
    s.d = d;
    s.epsilons = std::move(eps_list);
    return s;
}

} // namespace

TEST_CASE("relative slope of the linear toy system") {
    const double eps = 0.01;
    const auto sys = linear_toy(eps);
    // Faces much smaller than eps: the boxed bound closes on the hand value.
    // On the exact slow graph |dx/dt| = 1, slow speed 1, sheet slope 1.
    const SlopeBound s = relative_slope(*sys, toy_pair(eps, 1e-9, 0.02, 20));
    CHECK(s.upper >= 1.0);
    CHECK(s.upper < 1.25);
    CHECK(s.criterion_ok);  // bound * sqrt(0.01) is well under 1
}

TEST_CASE("relative slope grows like 1/eps on a frozen enclosure") {
    const EnclosurePair pair = toy_pair(0.01, 1e-3);
    const double s1 = relative_slope(*linear_toy(0.01), pair).upper;
    const double s2 = relative_slope(*linear_toy(0.001), pair).upper;
    CHECK(s2 > 5.0 * s1);
}

TEST_CASE("slowness certificate is monotone along the rescaling family") {
    // The family of enclosures that is fixed in the rescaled coordinates:
    // (x, y, z) -> (x r, y r^2, z r) with r = sqrt(eps'/eps0) maps the pair
    // built at eps0 onto its eps' sibling.
    const double eps0 = 1e-3;
    const auto sys0 = reference_system(eps0);
    const auto mesh = strip_mesh(10);
    const LiftedSurface approx = build_approximation(
        lift(mesh, [&](double y, double z) { return sys0->critical_height_mid(y, z); }),
        *sys0);
    const EnclosurePair pair = verify_pair(*sys0, approx, 64.0);
    double prev = relative_slope(*sys0, pair).upper * std::sqrt(eps0);
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        const double r = std::sqrt(eps / eps0);
        auto scaled_mesh = std::make_shared<PlanarMesh>(*pair.mesh);
        for (Point2& p : scaled_mesh->vertices) {
            p.y *= r * r;
            p.z *= r;
        }
        EnclosurePair scaled;
        scaled.mesh = std::move(scaled_mesh);
        scaled.epsilon = eps;
        scaled.shift_divisor = pair.shift_divisor;
        for (std::size_t i = 0; i < pair.x_left.size(); ++i) {
            scaled.x_left.push_back(pair.x_left[i] * r);
            scaled.x_right.push_back(pair.x_right[i] * r);
        }
        const double cur =
            relative_slope(*reference_system(eps), scaled).upper * std::sqrt(eps);
        CHECK(cur <= prev * (1.0 + 1e-9));
        prev = cur;
    }
}

TEST_CASE("relative slope rejects slow-speed sign changes") {
    // g_y = 0 and g_z = 0 make the slow speed contain zero everywhere.
    const auto stopped = constant_system(1.0, 0.0, 0.0);
    EnclosurePair pair = toy_pair(1.0, 0.1);
    CHECK_THROWS_AS(relative_slope(*stopped, pair), DomainError);
}

TEST_CASE("log-log slope fits") {
    std::vector<std::pair<double, double>> quad;
    for (double e = 1.0; e <= 4.0; e += 0.5) quad.emplace_back(e, -2.0 * e);
    CHECK(fit_loglog_slope(quad, 1.0, 4.0) == doctest::Approx(-2.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> flat;
    for (double e = 1.0; e <= 4.0; e += 0.5) flat.emplace_back(e, -3.5);
    CHECK(fit_loglog_slope(flat, 1.0, 4.0) == doctest::Approx(0.0).epsilon(1e-12));

    const std::vector<std::pair<double, double>> two{{1.0, -2.0}, {2.0, -4.0}};
    CHECK(fit_loglog_slope(two, 0.0, 5.0) == doctest::Approx(-2.0).epsilon(1e-12));

    // Window filtering applies before the count check.
    CHECK_THROWS_AS(fit_loglog_slope(two, 1.5, 5.0), InsufficientData);
    CHECK_THROWS_AS(fit_loglog_slope({}, 0.0, 1.0), InsufficientData);
}

TEST_CASE("default epsilon grid spans five decades in half steps") {
    const auto grid = default_epsilon_grid();
    REQUIRE(grid.size() == 9);
    CHECK(grid.front() == doctest::Approx(0.1));
    CHECK(grid.back() == doctest::Approx(1e-5));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        CHECK(grid[i + 1] < grid[i]);
}

TEST_CASE("single-epsilon sweep sanity") {
    auto recs = sweep(strip_settings(1, {1e-3}));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].epsilon == 1e-3);
    CHECK(recs[0].iota > 0);
    CHECK(recs[0].t_mesh > 0.0);
}

TEST_CASE("sweep records the full pipeline per epsilon") {
    auto s = strip_settings(10, {1e-2, 1e-3});
    s.threads = 2;
    const auto recs = sweep(s);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
        CHECK(r.verified);
        CHECK(r.eta_final <= r.eta_initial);
        CHECK(r.eta_final > 0.0);
        CHECK(r.verified_N > 0.0);
        CHECK(r.passes > 0);
        CHECK(r.s_eps_hi > 0.0);
    }
    // Records come back in epsilon order regardless of scheduling.
    CHECK(recs[0].epsilon == 1e-2);
    CHECK(recs[1].epsilon == 1e-3);

    // Deterministic across thread counts.
    auto s1 = strip_settings(10, {1e-2, 1e-3});
    s1.threads = 1;
    const auto serial = sweep(s1);
    for (int i = 0; i < 2; ++i) {
        CHECK(serial[i].eta_final == recs[i].eta_final);
        CHECK(serial[i].verified_N == recs[i].verified_N);
        CHECK(serial[i].passes == recs[i].passes);
    }
}

TEST_CASE("sweep continues past verification failures") {
    // A fold-hugging domain cannot verify; the record carries the error.
    SweepSettings s;
    s.make_system = [](double eps) -> std::shared_ptr<const SlowFastSystem> {
        return std::make_shared<const SingularHopf>(eps, reference_params(),
                                                    Branch::Plus);
    };
    s.domain = Domain2{1e-4, 2e-3, -0.01, 0.01};
    s.d = 4;
    s.epsilons = {0.5};
    const auto recs = sweep(s);
    REQUIRE(recs.size() == 1);
    CHECK(!recs[0].verified);
    CHECK(!recs[0].error.empty());
    CHECK(recs[0].verified_N == 0.0);
}

TEST_CASE("tightening can be disabled") {
    auto on = strip_settings(10, {1e-3});
    auto off = strip_settings(10, {1e-3});
    off.tighten_enabled = false;
    const auto ron = sweep(on);
    const auto roff = sweep(off);
    CHECK(roff[0].passes == 0);
    CHECK(roff[0].t_tighten == 0.0);
    CHECK(roff[0].eta_final == roff[0].eta_initial);
    CHECK(roff[0].eta_final >= ron[0].eta_final);
}

TEST_CASE("plateau structure at a coarse mesh") {
    std::vector<double> eps;
    for (double e = 3.0; e <= 5.0 + 1e-9; e += 0.5) eps.push_back(std::pow(10.0, -e));
    const auto recs = sweep(strip_settings(12, eps));
    REQUIRE(recs.size() == 5);
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = recs.size() - 3; i < recs.size(); ++i) {
        REQUIRE(recs[i].verified);
        const double v = std::log10(recs[i].eta_final);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 0.1);
}

TEST_CASE("sweep CSV schema") {
    const auto recs = sweep(strip_settings(8, {1e-3}));
    std::ostringstream out;
    write_sweep_csv(recs, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "epsilon,iota,eta_initial,eta_final,verified_N,s_eps_hi,criterion_ok,"
          "passes,t_mesh,t_verify,t_tighten");
    std::string row;
    std::getline(in, row);
    int commas = 0;
    for (char c : row) commas += (c == ',');
    CHECK(commas == 10);
    const std::string eps_field = row.substr(0, row.find(','));
    CHECK(std::stod(eps_field) == 1e-3);
}

TEST_CASE("sweep slope helper matches the direct fit") {
    std::vector<SweepRecord> recs(3);
    for (int i = 0; i < 3; ++i) {
        recs[i].epsilon = std::pow(10.0, -(i + 1.0));
        recs[i].eta_final = 4.2 * recs[i].epsilon * recs[i].epsilon;
        recs[i].verified = true;
    }
    CHECK(sweep_slope(recs, 1.0, 3.0) == doctest::Approx(-2.0).epsilon(1e-12));
    recs[1].verified = false;  // dropped from the fit
    CHECK(sweep_slope(recs, 1.0, 3.0) == doctest::Approx(-2.0).epsilon(1e-12));
}
