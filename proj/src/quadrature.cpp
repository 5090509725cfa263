#include "ncs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ncs {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kNegInf = -std::numeric_limits<double>::infinity();

// Gauss-Kronrod 7-15 nodes and weights (positive half; node 7 is the center).
// Odd-indexed nodes form the embedded 7-point Gauss rule.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double log_val; // ln of the K15 estimate (integrand positive)
    double log_err; // ln |K15 - G7|
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b,
                 long& evals) {
    double xm = 0.5 * (a + b);
    double xr = 0.5 * (b - a);
    double fv[15];
    for (int k = 0; k < 7; ++k) {
        fv[k] = f(xm - xr * kXgk[k]);
        fv[14 - k] = f(xm + xr * kXgk[k]);
    }
    fv[7] = f(xm);
    evals += 15;

    double m = kNegInf;
    for (double v : fv) m = std::max(m, v);
    Panel p{a, b, kNegInf, kNegInf};
    if (m == kNegInf) return p; // integrand underflows on the whole panel

    double sk = 0.0, sg = 0.0;
    for (int k = 0; k < 7; ++k) {
        double pair = std::exp(fv[k] - m) + std::exp(fv[14 - k] - m);
        sk += kWgk[k] * pair;
        if (k % 2 == 1) sg += kWg[k / 2] * pair;
    }
    double center = std::exp(fv[7] - m);
    sk += kWgk[7] * center;
    sg += kWg[3] * center;

    p.log_val = m + std::log(sk) + std::log(xr);
    double diff = std::fabs(sk - sg);
    p.log_err = (diff > 0.0) ? m + std::log(diff) + std::log(xr) : kNegInf;
    return p;
}

double log_sum(const std::vector<double>& logs) {
    double m = kNegInf;
    for (double v : logs) m = std::max(m, v);
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double v : logs) s += std::exp(v - m);
    return m + std::log(s);
}

// Locate an upper cutoff for an integrand with (at least) exponential decay:
// first grid point past the maximum where the log-integrand has dropped 60
// nats below its peak.
double find_cutoff(const std::function<double(double)>& f, long& evals) {
    double x_lo = 1e-8;
    double x_hi = 1e5;
    const int grid = 512;
    for (int attempt = 0; attempt < 4; ++attempt) {
        double ratio = std::pow(x_hi / x_lo, 1.0 / (grid - 1));
        double fmax = kNegInf;
        int imax = 0;
        std::vector<double> xs(grid), fs(grid);
        double x = x_lo;
        for (int i = 0; i < grid; ++i, x *= ratio) {
            xs[i] = x;
            fs[i] = f(x);
            ++evals;
            if (fs[i] > fmax) {
                fmax = fs[i];
                imax = i;
            }
        }
        if (fmax == kNegInf)
            throw QuadratureError("integrand underflows everywhere on the scan grid",
                                  {kNegInf, 0.0, evals, QuadTransform::plain});
        for (int i = imax + 1; i < grid; ++i)
            if (fs[i] <= fmax - 60.0) return xs[i];
        x_hi *= 100.0; // decay not yet reached; widen the scan
    }
    throw QuadratureError("no exponential-decay cutoff found below 1e11",
                          {kNegInf, 0.0, evals, QuadTransform::plain});
}

} // namespace

const char* transform_name(QuadTransform t) {
    switch (t) {
        case QuadTransform::beta_endpoint: return "beta_endpoint";
        case QuadTransform::sqrt_bessel: return "sqrt_bessel";
        case QuadTransform::plain: return "plain";
    }
    return "?";
}

QuadResult integrate_density(const std::function<double(double)>& log_integrand,
                             double lo, double hi, double target_rel_tol,
                             QuadTransform tag) {
    if (!(target_rel_tol >= 1e-13))
        throw ToleranceError("target_rel_tol below the 1e-13 floor");
    if (!(target_rel_tol <= 1e-3))
        throw ToleranceError("target_rel_tol above 1e-3");

    long evals = 0;
    if (std::isinf(hi)) hi = find_cutoff(log_integrand, evals);
    if (!(lo >= 0.0) || !(hi > lo))
        throw std::invalid_argument("integrate_density: bad interval");

    // initial geometric panelization toward the left endpoint, where the
    // algebraic / logarithmic singularities sit
    std::vector<double> edges;
    edges.push_back(lo);
    if (lo == 0.0) {
        const int depth = 36;
        for (int k = depth; k >= 0; --k) edges.push_back(hi * std::ldexp(1.0, -k));
    } else {
        for (int k = 1; k <= 8; ++k) edges.push_back(lo + (hi - lo) * k / 8.0);
    }

    std::vector<Panel> panels;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        panels.push_back(eval_panel(log_integrand, edges[i], edges[i + 1], evals));

    const long max_evals = 500000;
    const double min_width = (hi - lo) * 1e-15;

    auto totals = [&panels]() {
        std::vector<double> lv, le;
        lv.reserve(panels.size());
        le.reserve(panels.size());
        for (const Panel& p : panels) {
            lv.push_back(p.log_val);
            le.push_back(p.log_err);
        }
        return std::pair<double, double>{log_sum(lv), log_sum(le)};
    };

    while (true) {
        auto [log_total, log_err_total] = totals();
        double rel = (log_total == kNegInf)
                         ? 0.0
                         : std::exp(log_err_total - log_total);
        if (log_total == kNegInf || rel <= target_rel_tol)
            return {log_total, std::max(rel, 5e-15), evals, tag};

        // refine the panel with the largest error contribution
        size_t worst = 0;
        for (size_t i = 1; i < panels.size(); ++i)
            if (panels[i].log_err > panels[worst].log_err ||
                (panels[i].log_err == panels[worst].log_err &&
                 panels[i].a < panels[worst].a))
                worst = i;

        if (evals >= max_evals || (panels[worst].b - panels[worst].a) < min_width)
            throw QuadratureError("adaptive refinement stalled before reaching the "
                                  "target tolerance",
                                  {log_total, std::max(rel, 5e-15), evals, tag});

        Panel old = panels[worst];
        double mid = 0.5 * (old.a + old.b);
        panels[worst] = eval_panel(log_integrand, old.a, mid, evals);
        // keep panels ordered by position for a fixed combination order
        panels.insert(panels.begin() + static_cast<long>(worst) + 1,
                      eval_panel(log_integrand, mid, old.b, evals));
    }
}

QuadResult integrate_moment(const BorelMeasure& measure, long n,
                            double target_rel_tol) {
    if (n < 0) throw std::domain_error("integrate_moment: requires n >= 0");
    if (!(target_rel_tol >= 1e-13))
        throw ToleranceError("target_rel_tol below the 1e-13 floor");
    if (!(target_rel_tol <= 1e-3))
        throw ToleranceError("target_rel_tol above 1e-3");

    double nd = static_cast<double>(n);
    switch (measure.right_behavior) {
        case RightBehavior::algebraic: {
            double q = 2.0 * measure.family.j - 2.0;
            if (q >= 0.0) {
                auto f = [&measure, nd](double t) {
                    return measure.log_density(t) + nd * std::log(t);
                };
                return integrate_density(f, 0.0, measure.support_hi, target_rel_tol,
                                         QuadTransform::beta_endpoint);
            }
            // -1 < q < 0: absorb the right-endpoint weight with 1-t = v^{1/(1+q)}
            double m = 1.0 / (1.0 + q);
            double c0 = std::log(2.0 * measure.family.j - 1.0) + std::log(m);
            auto f = [c0, m, nd](double v) {
                double one_minus_t = -std::expm1(m * std::log(v));
                return c0 + nd * std::log(one_minus_t);
            };
            return integrate_density(f, 0.0, 1.0, target_rel_tol,
                                     QuadTransform::beta_endpoint);
        }
        case RightBehavior::exp_sqrt: {
            double c = measure.decay_coef;
            double log_c = std::log(c);
            auto f = [&measure, nd, c, log_c](double u) {
                double t = (u / c) * (u / c);
                return measure.log_density_fn(t) + nd * 2.0 * (std::log(u) - log_c) +
                       std::log(2.0 * u) - 2.0 * log_c;
            };
            return integrate_density(f, 0.0, kInf, target_rel_tol,
                                     QuadTransform::sqrt_bessel);
        }
        case RightBehavior::exp_plain: {
            auto f = [&measure, nd](double t) {
                return measure.log_density_fn(t) +
                       (nd == 0.0 ? 0.0 : nd * std::log(t));
            };
            return integrate_density(f, 0.0, kInf, target_rel_tol,
                                     QuadTransform::plain);
        }
    }
    throw std::logic_error("integrate_moment: unreachable");
}

} // namespace ncs
