#include "ccdeform/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ccdeform {
namespace {

// 4-point Gauss-Legendre on [0,1]
constexpr double kGx[4] = {0.06943184420297371, 0.33000947820757187,
                           0.66999052179242813, 0.93056815579702629};
constexpr double kGw[4] = {0.17392742256872693, 0.32607257743127307,
                           0.32607257743127307, 0.17392742256872693};

// Lagrange basis over 6 integer nodes at offsets {base, base+1, ..., base+5},
// evaluated at local coordinate x (same units).
void lagrange6(double x, int base, double* w, double* dw) {
    double nodes[6];
    for (int k = 0; k < 6; ++k) nodes[k] = base + k;
    for (int k = 0; k < 6; ++k) {
        double num = 1.0, den = 1.0;
        for (int j = 0; j < 6; ++j) {
            if (j == k) continue;
            num *= (x - nodes[j]);
            den *= (nodes[k] - nodes[j]);
        }
        if (w) w[k] = num / den;
        if (dw) {
            double s = 0.0;
            for (int m = 0; m < 6; ++m) {
                if (m == k) continue;
                double p = 1.0;
                for (int j = 0; j < 6; ++j) {
                    if (j == k || j == m) continue;
                    p *= (x - nodes[j]);
                }
                s += p;
            }
            dw[k] = s / den;
        }
    }
}

// Sample index with wraparound/clamping rules baked in.
inline int wrap_index(int j, int n, bool closed) {
    if (closed) {
        j %= n;
        if (j < 0) j += n;
        return j;
    }
    return std::clamp(j, 0, n - 1);
}

struct Stencil {
    int idx[6];
    double x;      // evaluation coordinate relative to idx[0] in grid steps
};

Stencil make_stencil(const Grid& g, double u) {
    const double h = g.step();
    const int npts = g.point_count();
    double t = (u - g.a) / h;
    int cell = static_cast<int>(std::floor(t));
    if (!g.closed) cell = std::clamp(cell, 0, g.n_samples - 1);
    int base = cell - 2;
    if (!g.closed) base = std::clamp(base, 0, npts - 6);
    Stencil st;
    for (int k = 0; k < 6; ++k) st.idx[k] = wrap_index(base + k, npts, g.closed);
    st.x = t - base;
    return st;
}

} // namespace

void QuinticInterp::eval(double u, double* out) const {
    const auto& g = c->grid;
    Stencil st = make_stencil(g, u);
    double w[6];
    lagrange6(st.x, 0, w, nullptr);
    const int d = c->dim;
    for (int k = 0; k < d; ++k) out[k] = 0.0;
    for (int k = 0; k < 6; ++k) {
        const double* p = c->point(st.idx[k]);
        for (int m = 0; m < d; ++m) out[m] += w[k] * p[m];
    }
}

void QuinticInterp::eval_deriv(double u, double* out) const {
    const auto& g = c->grid;
    Stencil st = make_stencil(g, u);
    double dw[6];
    lagrange6(st.x, 0, nullptr, dw);
    const int d = c->dim;
    const double inv_h = 1.0 / g.step();
    for (int k = 0; k < d; ++k) out[k] = 0.0;
    for (int k = 0; k < 6; ++k) {
        const double* p = c->point(st.idx[k]);
        for (int m = 0; m < d; ++m) out[m] += dw[k] * p[m];
    }
    for (int m = 0; m < d; ++m) out[m] *= inv_h;
}

void QuinticInterp::eval_both(double u, double* val, double* der) const {
    const auto& g = c->grid;
    Stencil st = make_stencil(g, u);
    double w[6], dw[6];
    lagrange6(st.x, 0, w, dw);
    const int d = c->dim;
    const double inv_h = 1.0 / g.step();
    for (int k = 0; k < d; ++k) { val[k] = 0.0; der[k] = 0.0; }
    for (int k = 0; k < 6; ++k) {
        const double* p = c->point(st.idx[k]);
        for (int m = 0; m < d; ++m) {
            val[m] += w[k] * p[m];
            der[m] += dw[k] * p[m];
        }
    }
    for (int m = 0; m < d; ++m) der[m] *= inv_h;
}

double ArcTable::arc_at(double u) const {
    double t = (u - u0) / du;
    int k = std::clamp(static_cast<int>(std::floor(t)), 0, static_cast<int>(cum.size()) - 2);
    double frac = t - k;
    // linear within a fine substep is only a seed; callers refine via speed_fn
    return cum[k] + frac * (cum[k + 1] - cum[k]);
}

double ArcTable::param_at(double s) const {
    auto it = std::lower_bound(cum.begin(), cum.end(), s);
    int k = std::clamp(static_cast<int>(it - cum.begin()) - 1, 0, static_cast<int>(cum.size()) - 2);
    double seg = cum[k + 1] - cum[k];
    double frac = seg > 0 ? (s - cum[k]) / seg : 0.0;
    return u0 + (k + frac) * du;
}

ArcTable build_arc_table(const SampledCurve& curve, int refine) {
    QuinticInterp qi(curve);
    const Grid& g = curve.grid;
    const int nsub = g.n_samples * refine;
    const double du = (g.b - g.a) / nsub;
    ArcTable tab;
    tab.u0 = g.a;
    tab.du = du;
    tab.cum.resize(nsub + 1);
    tab.cum[0] = 0.0;
    std::vector<double> der(curve.dim);
    double acc = 0.0, comp = 0.0;   // Neumaier-compensated running sum
    for (int k = 0; k < nsub; ++k) {
        double seg = 0.0;
        for (int q = 0; q < 4; ++q) {
            double u = g.a + (k + kGx[q]) * du;
            qi.eval_deriv(u, der.data());
            double sp = 0.0;
            for (int m = 0; m < curve.dim; ++m) sp += der[m] * der[m];
            seg += kGw[q] * std::sqrt(sp);
        }
        seg *= du;
        double t = acc + seg;
        if (std::abs(acc) >= std::abs(seg)) comp += (acc - t) + seg;
        else comp += (seg - t) + acc;
        acc = t;
        tab.cum[k + 1] = acc + comp;
    }
    return tab;
}

} // namespace ccdeform
