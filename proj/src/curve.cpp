#include "ccdeform/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "ccdeform/interp.hpp"

namespace ccdeform {
namespace {

inline int wrap(int j, int n) {
    j %= n;
    return j < 0 ? j + n : j;
}

// 4th-order first-derivative stencils.
// Interior: (f[-2] - 8 f[-1] + 8 f[1] - f[2]) / (12h)
// One-sided (j=0):  (-25 f0 + 48 f1 - 36 f2 + 16 f3 - 3 f4) / (12h)
// Near edge (j=1):  (-3 f0 - 10 f1 + 18 f2 - 6 f3 + f4) / (12h)
void d1_row(const SampledCurve& c, int j, double* out) {
    const int n = c.point_count();
    const int d = c.dim;
    const double ih = 1.0 / (12.0 * c.grid.step());
    const double* ref = c.point(j);   // subtracted so constants cancel exactly
    auto add = [&](int idx, double w) {
        const double* p = c.point(idx);
        for (int m = 0; m < d; ++m) out[m] += w * (p[m] - ref[m]);
    };
    for (int m = 0; m < d; ++m) out[m] = 0.0;
    if (c.grid.closed) {
        add(wrap(j - 2, n), 1.0); add(wrap(j - 1, n), -8.0);
        add(wrap(j + 1, n), 8.0); add(wrap(j + 2, n), -1.0);
    } else if (j >= 2 && j <= n - 3) {
        add(j - 2, 1.0); add(j - 1, -8.0); add(j + 1, 8.0); add(j + 2, -1.0);
    } else if (j == 0) {
        add(0, -25.0); add(1, 48.0); add(2, -36.0); add(3, 16.0); add(4, -3.0);
    } else if (j == 1) {
        add(0, -3.0); add(1, -10.0); add(2, 18.0); add(3, -6.0); add(4, 1.0);
    } else if (j == n - 2) {
        add(n - 1, 3.0); add(n - 2, 10.0); add(n - 3, -18.0); add(n - 4, 6.0); add(n - 5, -1.0);
    } else { // j == n-1
        add(n - 1, 25.0); add(n - 2, -48.0); add(n - 3, 36.0); add(n - 4, -16.0); add(n - 5, 3.0);
    }
    for (int m = 0; m < d; ++m) out[m] *= ih;
}

// 4th-order second derivative.
// Interior: (-f[-2] + 16 f[-1] - 30 f0 + 16 f[1] - f[2]) / (12h^2)
// One-sided (j=0): (45 f0 -154 f1 +214 f2 -156 f3 +61 f4 -10 f5) / (12h^2)
// Near edge (j=1): (10 f0 -15 f1 -4 f2 +14 f3 -6 f4 + f5) / (12h^2)
void d2_row(const SampledCurve& c, int j, double* out) {
    const int n = c.point_count();
    const int d = c.dim;
    const double h = c.grid.step();
    const double ih2 = 1.0 / (12.0 * h * h);
    auto add = [&](int idx, double w) {
        const double* p = c.point(idx);
        for (int m = 0; m < d; ++m) out[m] += w * p[m];
    };
    for (int m = 0; m < d; ++m) out[m] = 0.0;
    if (c.grid.closed) {
        add(wrap(j - 2, n), -1.0); add(wrap(j - 1, n), 16.0); add(j, -30.0);
        add(wrap(j + 1, n), 16.0); add(wrap(j + 2, n), -1.0);
    } else if (j >= 2 && j <= n - 3) {
        add(j - 2, -1.0); add(j - 1, 16.0); add(j, -30.0); add(j + 1, 16.0); add(j + 2, -1.0);
    } else if (j == 0) {
        add(0, 45.0); add(1, -154.0); add(2, 214.0); add(3, -156.0); add(4, 61.0); add(5, -10.0);
    } else if (j == 1) {
        add(0, 10.0); add(1, -15.0); add(2, -4.0); add(3, 14.0); add(4, -6.0); add(5, 1.0);
    } else if (j == n - 2) {
        add(n - 1, 10.0); add(n - 2, -15.0); add(n - 3, -4.0); add(n - 4, 14.0); add(n - 5, -6.0); add(n - 6, 1.0);
    } else {
        add(n - 1, 45.0); add(n - 2, -154.0); add(n - 3, 214.0); add(n - 4, -156.0); add(n - 5, 61.0); add(n - 6, -10.0);
    }
    for (int m = 0; m < d; ++m) out[m] *= ih2;
}

} // namespace

void SampledCurve::check_sizes() const {
    if (dim < 1) throw Error("SampledCurve: dim must be >= 1");
    if (grid.n_samples < 1) throw Error("SampledCurve: empty grid");
    if (!(grid.a < grid.b)) throw Error("SampledCurve: requires a < b");
    if (pts.size() != static_cast<size_t>(point_count()) * dim)
        throw Error("SampledCurve: points array length does not match grid");
}

SphericalCurve SphericalCurve::project(SampledCurve c, double tol) {
    c.check_sizes();
    const int n = c.point_count();
    for (int j = 0; j < n; ++j) {
        double* p = c.point(j);
        double nrm = 0.0;
        for (int m = 0; m < c.dim; ++m) nrm += p[m] * p[m];
        nrm = std::sqrt(nrm);
        if (std::abs(nrm - 1.0) > tol)
            throw Error("SphericalCurve: sample " + std::to_string(j) + " off the unit sphere by " +
                        std::to_string(std::abs(nrm - 1.0)));
        for (int m = 0; m < c.dim; ++m) p[m] /= nrm;
    }
    return SphericalCurve{std::move(c)};
}

void CurveFamily::validate() const {
    if (t_grid.size() != slices.size() || t_grid.empty())
        throw Error("CurveFamily: t_grid/slices size mismatch");
    if (t_grid.front() != 0.0 || t_grid.back() != 1.0)
        throw Error("CurveFamily: t_grid must start at 0 and end at 1");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw Error("CurveFamily: t_grid not increasing");
    for (const auto& s : slices) {
        s.check_sizes();
        if (!(s.grid == slices.front().grid) || s.dim != slices.front().dim)
            throw GridMismatch("CurveFamily: slices must share grid and dim");
    }
}

double CurveFamily::max_c1_step() const {
    double m = 0.0;
    for (size_t i = 1; i < slices.size(); ++i)
        m = std::max(m, c1_distance(slices[i - 1], slices[i]));
    return m;
}

SampledCurve derivative(const SampledCurve& curve, int order) {
    curve.check_sizes();
    if (order != 1 && order != 2) throw Error("derivative: order must be 1 or 2");
    if (curve.point_count() < 8) throw TooCoarse("derivative: need at least 8 samples");
    SampledCurve out(curve.grid, curve.dim);
    const int n = curve.point_count();
    for (int j = 0; j < n; ++j) {
        if (order == 1) d1_row(curve, j, out.point(j));
        else d2_row(curve, j, out.point(j));
    }
    out.smoothness_order = std::max(0, curve.smoothness_order - order);
    return out;
}

std::vector<double> speeds(const SampledCurve& curve) {
    SampledCurve d = derivative(curve, 1);
    const int n = curve.point_count();
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) {
        const double* p = d.point(j);
        double s = 0.0;
        for (int m = 0; m < curve.dim; ++m) s += p[m] * p[m];
        v[j] = std::sqrt(s);
    }
    return v;
}

void require_immersed(const SampledCurve& curve, const Config& cfg) {
    auto v = speeds(curve);
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double tol = cfg.tol_speed_rel * mean;
    for (size_t j = 0; j < v.size(); ++j)
        if (!(v[j] >= tol))
            throw NotImmersed("derivative norm " + std::to_string(v[j]) + " below tolerance at sample " +
                              std::to_string(j));
}

SphericalCurve tantrix(const SampledCurve& curve, const Config& cfg) {
    require_immersed(curve, cfg);
    SampledCurve d = derivative(curve, 1);
    const int n = d.point_count();
    for (int j = 0; j < n; ++j) {
        double* p = d.point(j);
        double s = 0.0;
        for (int m = 0; m < d.dim; ++m) s += p[m] * p[m];
        s = std::sqrt(s);
        for (int m = 0; m < d.dim; ++m) p[m] /= s;
    }
    d.smoothness_order = std::max(0, curve.smoothness_order - 1);
    return SphericalCurve{std::move(d)};
}

std::vector<double> curvature_profile(const SampledCurve& curve, const Config& cfg) {
    auto sp = speeds(curve);
    SphericalCurve t = tantrix(curve, cfg);
    auto tp = speeds(t.curve);
    std::vector<double> kappa(sp.size());
    for (size_t j = 0; j < sp.size(); ++j) kappa[j] = tp[j] / sp[j];
    return kappa;
}

std::vector<double> quadrature_weights(const Grid& grid) {
    const int n_int = grid.n_samples;          // interval count
    const int npts = grid.point_count();
    const double h = grid.step();
    std::vector<double> w(npts, 0.0);
    auto at = [&](int j) -> double& { return w[grid.closed ? wrap(j, npts) : j]; };
    int simpson_end = n_int;                    // intervals [0, simpson_end) by Simpson pairs
    bool tail38 = (n_int % 2) != 0;
    if (tail38) {
        if (n_int < 3) {                        // fall back to trapezoid on one interval
            at(0) += h / 2; at(1) += h / 2;
            return w;
        }
        simpson_end = n_int - 3;
    }
    for (int j = 0; j + 2 <= simpson_end; j += 2) {
        at(j) += h / 3.0; at(j + 1) += 4.0 * h / 3.0; at(j + 2) += h / 3.0;
    }
    if (tail38) {
        int j = simpson_end;
        at(j) += 3.0 * h / 8.0; at(j + 1) += 9.0 * h / 8.0;
        at(j + 2) += 9.0 * h / 8.0; at(j + 3) += 3.0 * h / 8.0;
    }
    return w;
}

double integrate_samples(const Grid& grid, std::span<const double> values) {
    auto w = quadrature_weights(grid);
    if (values.size() != w.size()) throw GridMismatch("integrate_samples: value count mismatch");
    double acc = 0.0, comp = 0.0;
    for (size_t j = 0; j < w.size(); ++j) {
        double term = w[j] * values[j];
        double t = acc + term;
        if (std::abs(acc) >= std::abs(term)) comp += (acc - t) + term;
        else comp += (term - t) + acc;
        acc = t;
    }
    return acc + comp;
}

double length(const SampledCurve& curve) {
    auto v = speeds(curve);
    return integrate_samples(curve.grid, v);
}

std::vector<double> center_of_mass(const SampledCurve& curve, const Config& cfg) {
    require_immersed(curve, cfg);
    auto v = speeds(curve);
    auto w = quadrature_weights(curve.grid);
    const int d = curve.dim;
    std::vector<double> cm(d, 0.0);
    double len = 0.0;
    for (size_t j = 0; j < w.size(); ++j) {
        double ww = w[j] * v[j];
        len += ww;
        const double* p = curve.point(static_cast<int>(j));
        for (int m = 0; m < d; ++m) cm[m] += ww * p[m];
    }
    for (int m = 0; m < d; ++m) cm[m] /= len;
    return cm;
}

std::vector<double> average(const SampledCurve& curve) {
    auto w = quadrature_weights(curve.grid);
    const int d = curve.dim;
    std::vector<double> av(d, 0.0);
    for (size_t j = 0; j < w.size(); ++j) {
        const double* p = curve.point(static_cast<int>(j));
        for (int m = 0; m < d; ++m) av[m] += w[j] * p[m];
    }
    for (int m = 0; m < d; ++m) av[m] /= (curve.grid.b - curve.grid.a);
    return av;
}

double c0_distance(const SampledCurve& a, const SampledCurve& b) {
    if (!(a.grid == b.grid) || a.dim != b.dim) throw GridMismatch("c0_distance: grids differ");
    double mx = 0.0;
    for (int j = 0; j < a.point_count(); ++j) {
        const double* pa = a.point(j);
        const double* pb = b.point(j);
        double s = 0.0;
        for (int m = 0; m < a.dim; ++m) { double d0 = pa[m] - pb[m]; s += d0 * d0; }
        mx = std::max(mx, s);
    }
    return std::sqrt(mx);
}

double c1_distance(const SampledCurve& a, const SampledCurve& b) {
    double c0 = c0_distance(a, b);
    SampledCurve da = derivative(a, 1), db = derivative(b, 1);
    return c0 + c0_distance(da, db);
}

SampledCurve resample_constant_speed(const SampledCurve& curve, int n_out, const Config& cfg) {
    require_immersed(curve, cfg);
    ArcTable tab = build_arc_table(curve);
    QuinticInterp qi(curve);
    const double L = tab.total();
    Grid g{curve.grid.a, curve.grid.b, n_out, curve.grid.closed};
    SampledCurve out(g, curve.dim);
    out.smoothness_order = curve.smoothness_order;
    std::vector<double> der(curve.dim);
    const int npts = g.point_count();
    for (int j = 0; j < npts; ++j) {
        double s_target = L * (g.param(j) - g.a) / (g.b - g.a);
        double u = tab.param_at(s_target);
        // Newton polish on the fine cumulative table + local quadrature
        for (int it = 0; it < 4; ++it) {
            // arc between table node below u and u via 4pt GL on interpolant speed
            double t = (u - tab.u0) / tab.du;
            int k = std::clamp(static_cast<int>(std::floor(t)), 0, static_cast<int>(tab.cum.size()) - 2);
            static constexpr double gx[4] = {0.06943184420297371, 0.33000947820757187,
                                             0.66999052179242813, 0.93056815579702629};
            static constexpr double gw[4] = {0.17392742256872693, 0.32607257743127307,
                                             0.32607257743127307, 0.17392742256872693};
            double lo = tab.u0 + k * tab.du;
            double seg = 0.0;
            for (int q = 0; q < 4; ++q) {
                qi.eval_deriv(lo + gx[q] * (u - lo), der.data());
                double sp = 0.0;
                for (int m = 0; m < curve.dim; ++m) sp += der[m] * der[m];
                seg += gw[q] * std::sqrt(sp);
            }
            double s_here = tab.cum[k] + seg * (u - lo);
            qi.eval_deriv(u, der.data());
            double sp = 0.0;
            for (int m = 0; m < curve.dim; ++m) sp += der[m] * der[m];
            sp = std::sqrt(sp);
            double step = (s_target - s_here) / sp;
            u += step;
            u = std::clamp(u, curve.grid.a, curve.grid.b);
            if (std::abs(step) < 1e-15 * (curve.grid.b - curve.grid.a)) break;
        }
        qi.eval(u, out.point(j));
    }
    // keep exact endpoints on open curves
    if (!g.closed) {
        std::memcpy(out.point(0), curve.point(0), sizeof(double) * curve.dim);
        std::memcpy(out.point(npts - 1), curve.point(curve.point_count() - 1), sizeof(double) * curve.dim);
    } else {
        std::memcpy(out.point(0), curve.point(0), sizeof(double) * curve.dim);
    }
    return out;
}

SampledCurve integrate_tantrix(const SphericalCurve& t, std::span<const double> basepoint) {
    const SampledCurve& c = t.curve;
    c.check_sizes();
    if (static_cast<int>(basepoint.size()) != c.dim)
        throw Error("integrate_tantrix: basepoint dim mismatch");
    const Grid& g = c.grid;
    const int nint = g.n_samples;
    const int d = c.dim;
    const double h = g.step();
    // per-interval integrals of the local quintic interpolant: 6-node weights
    // computed once per stencil offset by integrating Lagrange basis over the cell
    auto cell_weights = [](int base) {
        // nodes at offsets {base..base+5} relative to cell start; integrate over [0,1]
        std::array<double, 6> w{};
        static constexpr double gx[6] = {0.033765242898423986, 0.169395306766867743,
                                         0.380690406958401546, 0.619309593041598454,
                                         0.830604693233132257, 0.966234757101576014};
        static constexpr double gw[6] = {0.085662246189585173, 0.180380786524069304,
                                         0.233956967286345524, 0.233956967286345524,
                                         0.180380786524069304, 0.085662246189585173};
        for (int q = 0; q < 6; ++q) {
            double lw[6];
            double x = gx[q];
            for (int k = 0; k < 6; ++k) {
                double num = 1.0, den = 1.0;
                for (int j = 0; j < 6; ++j) {
                    if (j == k) continue;
                    num *= (x - (base + j));
                    den *= ((base + k) - (base + j));
                }
                lw[k] = num / den;
            }
            for (int k = 0; k < 6; ++k) w[k] += gw[q] * lw[k];
        }
        return w;
    };
    static const std::array<double, 6> w_int = cell_weights(-2);
    static const std::array<double, 6> w_0 = cell_weights(0);
    static const std::array<double, 6> w_1 = cell_weights(-1);
    static const std::array<double, 6> w_m2 = cell_weights(-3);
    static const std::array<double, 6> w_m1 = cell_weights(-4);

    SampledCurve out(g, d);
    out.smoothness_order = c.smoothness_order + 1;
    std::vector<double> acc(d), comp(d, 0.0);
    for (int m = 0; m < d; ++m) acc[m] = basepoint[m];
    std::memcpy(out.point(0), acc.data(), sizeof(double) * d);
    const int npts = c.point_count();
    for (int cell = 0; cell < nint; ++cell) {
        const double* w;
        int base;
        if (g.closed) { w = w_int.data(); base = cell - 2; }
        else if (cell == 0) { w = w_0.data(); base = 0; }
        else if (cell == 1) { w = w_1.data(); base = 0; }
        else if (cell == nint - 2) { w = w_m2.data(); base = npts - 6; }
        else if (cell == nint - 1) { w = w_m1.data(); base = npts - 6; }
        else { w = w_int.data(); base = cell - 2; }
        for (int m = 0; m < d; ++m) {
            double seg = 0.0;
            for (int k = 0; k < 6; ++k) {
                int idx = g.closed ? wrap(base + k, npts) : base + k;
                seg += w[k] * c.point(idx)[m];
            }
            seg *= h;
            double tsum = acc[m] + seg;
            if (std::abs(acc[m]) >= std::abs(seg)) comp[m] += (acc[m] - tsum) + seg;
            else comp[m] += (seg - tsum) + acc[m];
            acc[m] = tsum;
        }
        if (cell + 1 < npts) {
            double* o = out.point(cell + 1);
            for (int m = 0; m < d; ++m) o[m] = acc[m] + comp[m];
        }
    }
    return out;
}

} // namespace ccdeform
