#pragma once
#include <span>
#include <vector>

#include "ccdeform/curve.hpp"

namespace ccdeform {

// Local quintic (6-point) Lagrange interpolation on a uniform grid, with
// periodic wrap for closed grids and clamped stencils at open ends.
// Evaluates values and first derivatives of the interpolant.
struct QuinticInterp {
    const SampledCurve* c = nullptr;

    explicit QuinticInterp(const SampledCurve& curve) : c(&curve) {}

    void eval(double u, double* out) const;
    void eval_deriv(double u, double* out) const;          // d/du of interpolant
    void eval_both(double u, double* val, double* der) const;
};

// Monotone arc-length table: cumulative integral of a positive sampled
// speed function on a uniform (sub-)grid, with inversion.
struct ArcTable {
    double u0 = 0.0, du = 0.0;
    std::vector<double> cum;     // cum[k] = integral over [u0, u0 + k*du]

    double total() const { return cum.back(); }
    double arc_at(double u) const;          // interpolated cumulative arc
    double param_at(double s) const;        // inverse: arc -> parameter
};

// Builds an arc table for `curve` by integrating the quintic interpolant's
// speed on a grid refined by `refine` (composite Simpson per step).
ArcTable build_arc_table(const SampledCurve& curve, int refine = 8);

} // namespace ccdeform
