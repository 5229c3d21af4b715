#pragma once
#include <cstdint>
#include <string>

namespace ccdeform {

// All numeric tolerances and solver knobs in one place.  Every field can be
// overridden from a JSON config file (see io::load_config) or the CLI.
struct Config {
    // curve_core
    double tol_speed_rel = 1e-8;    // immersion floor, relative to mean speed
    double tol_sphere = 1e-12;      // unit-norm tolerance after projection
    double resample_rel = 1e-8;     // constant-speed target, relative

    // convex_select
    double tol_flat = 1e-7;         // nonflatness certificate floor (svmin/svmax)
    double margin_min_rel = 1e-6;   // interiority margin, relative to point-set scale
    double lp_eps = 1e-12;          // simplex pivot/feasibility epsilon
    int hull_enum_cap = 64;         // exact facet enumeration up to this many points
    int hull_subset = 48;           // farthest-point subset size for larger sets

    // geodesic_bumps
    double omega_max = 1e6;
    double param_tol = 1e-10;       // bisection tolerance on m / omega brackets
    double constraint_tol = 1e-8;   // residual tolerance (length, |cm|)
    int quad_per_osc = 7;           // GL panels per bump oscillation
    int m_scan = 24;                // sign-change scan resolution for solve_m

    // tantrix_deform
    double delta_floor = 1e-3;      // times tent weight, for the delta(t) schedule
    double delta_gap_frac = 0.40;   // delta <= frac * min arc gap
    double supp_frac = 0.125;       // supp(theta) = delta/8
    double eta = 1.0 / 16.0;        // endpoint freeze width in t
    int feasibility_doublings = 6;  // raise ell_tilde at most 2^6
    double cm_tol = 1e-7;           // per-slice cm residual
    double len_tol_rel = 1e-7;      // per-slice length residual, relative

    // constant_curvature
    double c_slack = 1.30;          // curvature plateau >= slack * per-interval demand
    double mu_frac = 0.5;           // per-interval tantrix length target = mu_frac * eps
    int partition_max_rounds = 3;   // extra bisection rounds if C1 budget missed
    int default_samples = 4096;
    int default_t_slices = 33;
    int out_samples_per_osc = 4;    // stored-grid density vs bump oscillations
    int64_t out_samples_cap = 1 << 21;
    double kappa_dev_tol = 1e-3;    // certified |kappa - c|/c bound

    // invariants
    int writhe_band = 4;
    double tol_disjoint_rel = 1e-6; // times bounding-box diameter
    double residual_max = 0.05;     // pre-round Gauss residual
    int invariant_samples = 4096;
    int sl_mod2_trials = 5;

    // misc
    uint64_t seed = 0x9e3779b97f4a7c15ull;
    int max_retries = 8;
    int threads = 0;                // 0 = respect CCDEFORM_THREADS, else 1
};

} // namespace ccdeform
