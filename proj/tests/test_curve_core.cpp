#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ccdeform/curve.hpp"
#include "ccdeform/interp.hpp"
#include "test_helpers.hpp"

using namespace ccdeform;
using namespace ccdeform::testing;

TEST_CASE("derivative: analytic circle") {
    auto c = circle3(1.0, 1024);
    auto d = derivative(c, 1);
    double worst = 0.0;
    for (int j = 0; j < c.point_count(); ++j) {
        double s = c.grid.param(j);
        double ex[3] = {-std::sin(s), std::cos(s), 0.0};
        for (int m = 0; m < 3; ++m) worst = std::max(worst, std::abs(d.point(j)[m] - ex[m]));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("derivative: constant curve is exactly zero") {
    Grid g{0.0, 1.0, 32, false};
    auto c = from_function([](double, double* p) { p[0] = 0.3; p[1] = -2.0; p[2] = 5.0; }, g, 3);
    auto d = derivative(c, 1);
    for (int j = 0; j < d.point_count(); ++j)
        for (int m = 0; m < 3; ++m) CHECK(d.point(j)[m] == 0.0);
}

TEST_CASE("derivative: polynomial second derivative at interior point") {
    Grid g{0.0, 1.0, 64, false};
    auto c = from_function([](double s, double* p) { p[0] = s; p[1] = s * s; p[2] = s * s * s; }, g, 3);
    auto d2 = derivative(c, 2);
    int j = 32;  // s = 0.5
    CHECK(std::abs(d2.point(j)[0] - 0.0) < 1e-6);
    CHECK(std::abs(d2.point(j)[1] - 2.0) < 1e-6);
    CHECK(std::abs(d2.point(j)[2] - 3.0) < 1e-6);
}

TEST_CASE("derivative: too coarse") {
    Grid g{0.0, 1.0, 6, false};
    auto c = from_function([](double s, double* p) { p[0] = s; p[1] = 0; p[2] = 0; }, g, 3);
    CHECK_THROWS_AS(derivative(SampledCurve(Grid{0.0, 1.0, 5, false}, 3), 1), TooCoarse);
}

TEST_CASE("tantrix: circle, segment, helix") {
    auto c = circle3(1.0, 1024);
    auto t = tantrix(c);
    for (int j = 0; j < 1024; j += 97) {
        double s = c.grid.param(j);
        CHECK(std::abs(t.curve.point(j)[0] + std::sin(s)) < 1e-8);
        CHECK(std::abs(t.curve.point(j)[1] - std::cos(s)) < 1e-8);
    }

    Grid g{0.0, 1.0, 64, false};
    auto seg = from_function([](double s, double* p) { p[0] = s; p[1] = 0; p[2] = 0; }, g, 3);
    auto ts = tantrix(seg);
    for (int j = 0; j < ts.curve.point_count(); ++j) {
        CHECK(ts.curve.point(j)[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(ts.curve.point(j)[1]) < 1e-12);
    }

    auto h = helix3(1.0, 1.0, 2048);
    auto th = tantrix(h);
    for (int j = 100; j < 2000; j += 317)
        CHECK(std::abs(th.curve.point(j)[2] - 1.0 / std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("curvature_profile: circle, helix, line") {
    auto c = circle3(2.0, 512);
    CHECK(max_abs_dev(curvature_profile(c), 0.5) < 1e-6);

    auto h = helix3(1.0, 1.0, 2048);
    auto kh = curvature_profile(h);
    // drop FD boundary samples of the open grid
    double worst = 0.0;
    for (int j = 8; j < h.point_count() - 8; ++j) worst = std::max(worst, std::abs(kh[j] - 0.5));
    CHECK(worst < 1e-6);

    Grid g{0.0, 1.0, 128, false};
    auto seg = from_function([](double s, double* p) { p[0] = 2 * s; p[1] = s; p[2] = -s; }, g, 3);
    CHECK(max_abs_dev(curvature_profile(seg), 0.0) < 1e-10);
}

TEST_CASE("length, center of mass, average") {
    auto c = circle3(1.0, 512);
    CHECK(std::abs(length(c) - 2 * kPi) < 1e-8);

    // unit-speed semicircle in R^2 from (1,0) through (0,1) to (-1,0)
    Grid g{0.0, kPi, 256, false};
    auto semi = from_function([](double s, double* p) { p[0] = std::cos(s); p[1] = std::sin(s); }, g, 2);
    auto cm = center_of_mass(semi);
    CHECK(std::abs(cm[0]) < 1e-8);
    CHECK(std::abs(cm[1] - 2.0 / kPi) < 1e-8);

    // great circle on S^2 (tilted): cm at origin
    Grid gg{0.0, 2 * kPi, 512, true};
    auto gc = from_function([](double s, double* p) {
        double u[3] = {1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0)};
        double v[3] = {0, 1, 0};
        for (int m = 0; m < 3; ++m) p[m] = std::cos(s) * u[m] + std::sin(s) * v[m];
    }, gg, 3);
    auto cmg = center_of_mass(gc);
    for (int m = 0; m < 3; ++m) CHECK(std::abs(cmg[m]) < 1e-9);

    // cm = ave for constant speed
    auto av = average(gc);
    for (int m = 0; m < 3; ++m) CHECK(std::abs(cmg[m] - av[m]) < 1e-9);
}

TEST_CASE("c1_distance: translation and symmetry") {
    auto a = circle3(1.0, 256);
    auto b = a;
    for (int j = 0; j < b.point_count(); ++j) b.point(j)[0] += 1e-3;
    CHECK(c1_distance(a, b) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(c1_distance(a, b) == c1_distance(b, a));
    CHECK(c1_distance(a, a) == 0.0);

    SampledCurve other(Grid{0.0, 1.0, 256, true}, 3);
    CHECK_THROWS_AS(c1_distance(a, other), GridMismatch);
}

TEST_CASE("resample_constant_speed: ellipse") {
    auto e = ellipse3(2.0, 1.0, 1024);
    auto r = resample_constant_speed(e, 1024);
    auto v = speeds(r);
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= v.size();
    double worst = 0.0;
    for (double x : v) worst = std::max(worst, std::abs(x - mean) / mean);
    CHECK(worst < 1e-8);
    // image stays on the ellipse
    for (int j = 0; j < r.point_count(); j += 53) {
        const double* p = r.point(j);
        double q = (p[0] / 2) * (p[0] / 2) + p[1] * p[1];
        CHECK(std::abs(q - 1.0) < 1e-9);
    }
}

TEST_CASE("resample_constant_speed: unit circle fixed point") {
    auto c = circle3(1.0, 512);
    auto r = resample_constant_speed(c, 512);
    CHECK(c0_distance(c, r) < 1e-10);
}

TEST_CASE("resample_constant_speed: zero-derivative sample rejected") {
    Grid g{-1.0, 1.0, 64, false};
    auto c = from_function([](double s, double* p) { p[0] = s * s * s; p[1] = 0; p[2] = 0; }, g, 3);
    CHECK_THROWS_AS(resample_constant_speed(c, 64), NotImmersed);
}

TEST_CASE("integrate_tantrix: constant direction gives straight segment") {
    Grid g{0.0, 2.0, 128, false};
    auto t = from_function([](double, double* p) { p[0] = 1; p[1] = 0; p[2] = 0; }, g, 3);
    double base[3] = {0, 0, 0};
    auto f = integrate_tantrix(SphericalCurve{t}, std::span<const double>(base, 3));
    for (int j = 0; j < f.point_count(); j += 17) {
        CHECK(std::abs(f.point(j)[0] - (g.param(j) - g.a)) < 1e-12);
        CHECK(std::abs(f.point(j)[1]) < 1e-14);
    }
}

TEST_CASE("integrate_tantrix: closed tantrix with zero average closes up") {
    auto c = circle3(1.0, 1024);
    auto t = tantrix(c);
    // closure gap = |integral of T| over the circle
    double gap2 = 0.0;
    for (int m = 0; m < 3; ++m) {
        std::vector<double> comp(t.curve.point_count());
        for (int j = 0; j < t.curve.point_count(); ++j) comp[j] = t.curve.point(j)[m];
        double I = integrate_samples(t.curve.grid, comp);
        gap2 += I * I;
    }
    CHECK(std::sqrt(gap2) <= 1e-8 * length(t.curve));
}

namespace {
// constant-speed resample relabeled onto [0, length]: unit speed
SampledCurve unit_speed(const SampledCurve& c, int n) {
    auto r = resample_constant_speed(c, n);
    double L = length(r);
    r.grid = Grid{0.0, L, n, r.grid.closed};
    return r;
}
} // namespace

TEST_CASE("round trip: trefoil tantrix/integrate within 1e-6 at N=4096") {
    auto tk = torus_knot_raw(2, 3, 2.0, 0.5, 4096);
    auto f = unit_speed(tk, 4096);
    auto t = tantrix(f);
    auto back = integrate_tantrix(t, f.point_span(0));
    CHECK(c0_distance(f, back) < 1e-6);
}

TEST_CASE("round trip converges at 4th order") {
    std::vector<double> errs;
    for (int N : {512, 1024, 2048, 4096}) {
        auto tk = torus_knot_raw(2, 3, 2.0, 0.5, N);
        auto f = unit_speed(tk, N);
        auto t = tantrix(f);
        auto back = integrate_tantrix(t, f.point_span(0));
        errs.push_back(c1_distance(f, back));
    }
    for (size_t i = 1; i < errs.size(); ++i) {
        double order = std::log2(errs[i - 1] / errs[i]);
        CHECK(order > 3.5);
    }
}

TEST_CASE("kappa equals tantrix speed after constant-speed resample") {
    auto tk = torus_knot_raw(2, 3, 2.0, 0.5, 2048);
    auto f = resample_constant_speed(tk, 2048);
    auto k = curvature_profile(f);
    auto t = tantrix(f);
    auto ts = speeds(t.curve);
    auto sp = speeds(f);
    double worst = 0.0;
    for (size_t j = 0; j < k.size(); ++j)
        worst = std::max(worst, std::abs(k[j] - ts[j] / sp[j]));
    CHECK(worst < 1e-12);  // identical by definition here
    // and |T'| itself approximates kappa since |f'| ~ const
    double L = length(f);
    double speed0 = L / (f.grid.b - f.grid.a);
    double worst2 = 0.0;
    for (size_t j = 0; j < k.size(); ++j)
        worst2 = std::max(worst2, std::abs(k[j] * speed0 - ts[j]) / ts[j]);
    CHECK(worst2 < 1e-6);
}

TEST_CASE("cm is reparametrization invariant") {
    auto e = ellipse3(2.0, 1.0, 1024);
    auto r = resample_constant_speed(e, 1024);
    auto cm1 = center_of_mass(e);
    auto cm2 = center_of_mass(r);
    for (int m = 0; m < 3; ++m) CHECK(std::abs(cm1[m] - cm2[m]) < 1e-8);
    // constant speed: cm = ave within 1e-9
    auto av = average(r);
    for (int m = 0; m < 3; ++m) CHECK(std::abs(cm2[m] - av[m]) < 1e-9);
}
