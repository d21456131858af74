#include "nlfront/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlfront {

MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double a,
                                       double b, double rel_tol, int max_iter) {
    if (!(a < b)) throw std::invalid_argument("golden_section_minimize: need a < b");
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b) + 1e-300); ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    MinimizeResult r;
    r.x = 0.5 * (a + b);
    r.value = f(r.x);
    return r;
}

MinimizeResult minimize_log_grid(const std::function<double(double)>& f, double lo, double hi,
                                 int grid_points, double rel_tol) {
    if (!(lo > 0.0 && hi > lo) || grid_points < 3)
        throw std::invalid_argument("minimize_log_grid: bad search domain");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> xs(grid_points);
    const double step = std::log(hi / lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) xs[i] = lo * std::exp(i * step);
    xs.back() = hi;

    int best = -1;
    double best_val = inf;
    for (int i = 0; i < grid_points; ++i) {
        double v = f(xs[i]);
        if (v < best_val) { best_val = v; best = i; }
    }
    MinimizeResult r;
    if (best < 0 || !std::isfinite(best_val)) {
        r.value = inf;
        return r;
    }
    if (best == 0 || best == grid_points - 1) {
        // Refine inside the edge cell but keep the edge flag: the infimum may
        // not be attained inside the search domain.
        double a = (best == 0) ? xs[0] : xs[grid_points - 2];
        double b = (best == 0) ? xs[1] : xs[grid_points - 1];
        MinimizeResult g = golden_section_minimize(f, a, b, rel_tol);
        if (g.value < best_val) r = g; else { r.x = xs[best]; r.value = best_val; }
        r.at_lower_edge = (best == 0);
        r.at_upper_edge = (best == grid_points - 1);
        return r;
    }
    r = golden_section_minimize(f, xs[best - 1], xs[best + 1], rel_tol);
    if (best_val < r.value) { r.x = xs[best]; r.value = best_val; }
    return r;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, lm, flm);
    double right = simpson(f, m, fm, b, fb, rm, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b), fm = f(m);
    double whole = simpson(f, a, fa, b, fb, m, fm);
    double tol = std::max(std::abs(whole), 1e-12) * rel_tol;
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 paired samples");
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit r;
    r.n = n;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double resid = y[i] - (r.intercept + r.slope * x[i]);
        ss_res += resid * resid;
        r.residual_max = std::max(r.residual_max, std::abs(resid));
    }
    if (n > 2) r.slope_stderr = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
    return r;
}

double rk4_scalar(const std::function<double(double)>& f, double u0, double T, double dt) {
    if (T < 0.0 || dt <= 0.0) throw std::invalid_argument("rk4_scalar: need T >= 0, dt > 0");
    double u = u0;
    double t = 0.0;
    while (t < T - 1e-15 * std::max(1.0, T)) {
        double step = std::min(dt, T - t);
        double k1 = f(u);
        double k2 = f(u + 0.5 * step * k1);
        double k3 = f(u + 0.5 * step * k2);
        double k4 = f(u + step * k3);
        u += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += step;
    }
    return u;
}

}  // namespace nlfront
