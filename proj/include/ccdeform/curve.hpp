#pragma once
#include <cstddef>
#include <span>
#include <vector>

#include "ccdeform/config.hpp"
#include "ccdeform/errors.hpp"

namespace ccdeform {

// Uniform parameter grid on [a,b].  n_samples counts intervals; an open grid
// stores n_samples+1 points, a closed one stores n_samples points with
// implicit wraparound (no duplicate endpoint).
struct Grid {
    double a = 0.0;
    double b = 1.0;
    int n_samples = 0;
    bool closed = false;

    int point_count() const { return closed ? n_samples : n_samples + 1; }
    double step() const { return (b - a) / n_samples; }
    double param(int j) const { return a + j * step(); }
    bool operator==(const Grid&) const = default;
};

// Uniformly sampled map from [a,b] into R^dim, stored flat row-major.
struct SampledCurve {
    Grid grid;
    int dim = 3;
    std::vector<double> pts;     // point_count() * dim
    int smoothness_order = 2;

    SampledCurve() = default;
    SampledCurve(Grid g, int d) : grid(g), dim(d), pts(static_cast<size_t>(g.point_count()) * d, 0.0) {}

    int point_count() const { return grid.point_count(); }
    double* point(int j) { return pts.data() + static_cast<size_t>(j) * dim; }
    const double* point(int j) const { return pts.data() + static_cast<size_t>(j) * dim; }
    std::span<const double> point_span(int j) const { return {point(j), static_cast<size_t>(dim)}; }

    void check_sizes() const;
};

// A SampledCurve constrained to the unit sphere.
struct SphericalCurve {
    SampledCurve curve;

    const Grid& grid() const { return curve.grid; }
    int dim() const { return curve.dim; }
    // Projects every sample to exact unit norm; throws if some sample is
    // farther than `tol` from the sphere before projection.
    static SphericalCurve project(SampledCurve c, double tol = 1e-6);
};

// A finite t-grid of curves sharing one Grid and dim: the discretized homotopy.
struct CurveFamily {
    std::vector<double> t_grid;          // increasing, t0 = 0, tM = 1
    std::vector<SampledCurve> slices;

    void validate() const;               // shared grid/dim, t monotone
    // max over adjacent pairs of |slice_{i+1} - slice_i|_1
    double max_c1_step() const;
};

// ---- curve_core operations ----------------------------------------------

// Per-sample derivative of the stated order (1 or 2); 4th-order centered
// stencils with periodic wrap when closed, one-sided 4th-order at open ends.
SampledCurve derivative(const SampledCurve& curve, int order);

// Speeds |f'| at every sample.
std::vector<double> speeds(const SampledCurve& curve);

// Throws NotImmersed unless every sample speed >= tol_speed
// (default: cfg.tol_speed_rel * mean speed).
void require_immersed(const SampledCurve& curve, const Config& cfg = {});

SphericalCurve tantrix(const SampledCurve& curve, const Config& cfg = {});

// kappa = |T'| / |f'| per sample.
std::vector<double> curvature_profile(const SampledCurve& curve, const Config& cfg = {});

double length(const SampledCurve& curve);
std::vector<double> center_of_mass(const SampledCurve& curve, const Config& cfg = {});
std::vector<double> average(const SampledCurve& curve);

// max_j |a_j - b_j| + max_j |a'_j - b'_j|; grids must match exactly.
double c1_distance(const SampledCurve& a, const SampledCurve& b);
double c0_distance(const SampledCurve& a, const SampledCurve& b);

// Arc-length reparametrization to constant speed on the same interval.
SampledCurve resample_constant_speed(const SampledCurve& curve, int n_out, const Config& cfg = {});

// f(s_j) = basepoint + cumulative quadrature of T from a to s_j.
SampledCurve integrate_tantrix(const SphericalCurve& t, std::span<const double> basepoint);

// Composite-Simpson weights for the curve's grid (handles odd interval
// counts with a 3/8 tail, wraps when closed).  Exposed for reuse.
std::vector<double> quadrature_weights(const Grid& grid);

// Composite-Simpson integral of per-sample scalar values on the grid.
double integrate_samples(const Grid& grid, std::span<const double> values);

} // namespace ccdeform
