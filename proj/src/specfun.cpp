#include "ncs/specfun.hpp"

#include <cmath>
#include <limits>

namespace ncs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficients c_k of 1/Gamma(z) = sum c_k z^k (Abramowitz & Stegun 6.1.34);
// 1/Gamma(1+x) = c_1 + c_2 x + c_3 x^2 + ...
constexpr double kInvGammaCoef[] = {
    1.00000000000000000000,  0.57721566490153286061, -0.65587807152025388108,
    -0.04200263503409523553, 0.16653861138229148950, -0.04219773455554433675,
    -0.00962197152787697356, 0.00721894324666309954, -0.00116516759185906511,
    -0.00021524167411495097, 0.00012805028238811619, -0.00002013485478078824,
    -0.00000125049348214267, 0.00000113302723198170, -0.00000020563384169776,
    0.00000000611609510448,  0.00000000500200764447, -0.00000000118127457049,
    0.00000000010434267117,  0.00000000000778226344, -0.00000000000369680562,
    0.00000000000051003703,  -0.00000000000002058326};

// Temme's Gamma_1(mu) = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), continuous
// through mu = 0 where it equals -gamma_E.
double temme_gamma1(double mu) {
    if (std::fabs(mu) > 0.1) {
        double gammi = std::exp(-ln_gamma(1.0 - mu));
        double gampl = std::exp(-ln_gamma(1.0 + mu));
        return (gammi - gampl) / (2.0 * mu);
    }
    // odd part of 1/Gamma(1+x): c_2 x + c_4 x^3 + ... (indices 1, 3, ...)
    double m2 = mu * mu;
    double s = 0.0;
    double p = 1.0;
    for (int k = 1; k <= 15; k += 2) {
        s += kInvGammaCoef[k] * p;
        p *= m2;
    }
    return -s;
}

// Scaled pair (e^x K_mu, e^x K_{mu+1}) with an extra log-scale carried
// separately: K_{mu+i} = k_i * exp(log_scale - x).
struct KPair {
    double log_scale; // ln of the factor multiplying the mantissas (incl. e^x)
    double kmu;
    double kmu1;
    double rel_err;
};

// Temme's series for x <= 2, |mu| <= 1/2 (Temme, J. Comput. Phys. 19, 1975).
KPair bessel_k_temme(double mu, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iter = 1000;

    double x2 = 0.5 * x;
    double mu2 = mu * mu;
    double pimu = kPi * mu;
    double fact = (std::fabs(pimu) < 1e-4) ? 1.0 + pimu * pimu / 6.0
                                           : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    double fact2 = (std::fabs(e) < 1e-4) ? 1.0 + e * e / 6.0 : std::sinh(e) / e;
    double gampl = std::exp(-ln_gamma(1.0 + mu));
    double gammi = std::exp(-ln_gamma(1.0 - mu));
    double gam1 = temme_gamma1(mu);
    double gam2 = 0.5 * (gammi + gampl);

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    double ee = std::exp(e);
    double p = 0.5 * ee / gampl;
    double q = 0.5 / (ee * gammi);
    double c = 1.0;
    double d2 = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= max_iter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d2 / i;
        p /= (i - mu);
        q /= (i + mu);
        double del = c * ff;
        sum += del;
        double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::fabs(del) < std::fabs(sum) * eps) break;
    }
    // sum = K_mu(x) unscaled; fold e^x into log_scale
    return {x, sum, sum1 * 2.0 / x, 4e-16 * (1.0 + 0.05 * i)};
}

// Steed/Temme continued fraction CF2 for x > 2, |mu| <= 1/2
// (Numerical Recipes sec. 6.6 variant, scaled by e^x throughout).
KPair bessel_k_cf2(double mu, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iter = 10000;

    double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double a1 = 0.25 - mu2;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= max_iter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) break;
    }
    h = a1 * h;
    double kmu = std::sqrt(kPi / (2.0 * x)) / s; // e^x K_mu
    double kmu1 = kmu * (mu + x + 0.5 - h) / x;
    return {0.0, kmu, kmu1, 4e-16 * (1.0 + 0.01 * i)};
}

// K_nu as (mantissa, log_scale) with K_nu(x) = mantissa * exp(log_scale - x)
// and e^x K_nu(x) = mantissa * exp(log_scale).
struct KScaled {
    double mantissa;
    double log_scale;
    double rel_err;
};

KScaled bessel_k_core(double nu, double x) {
    if (!std::isfinite(nu) || !std::isfinite(x))
        throw std::domain_error("bessel_k: non-finite argument");
    if (x <= 0.0) throw std::domain_error("bessel_k: requires x > 0");

    nu = std::fabs(nu); // K_{-nu} = K_nu
    int n = static_cast<int>(std::lround(nu));
    double mu = nu - n; // |mu| <= 1/2

    KPair pair = (x <= 2.0) ? bessel_k_temme(mu, x) : bessel_k_cf2(mu, x);

    const double rescale_at = 1e280;
    const double log_rescale = std::log(rescale_at);

    double km = pair.kmu;   // K_{mu}
    double kp = pair.kmu1;  // K_{mu+1}
    double ls = pair.log_scale;
    if (n == 0) return {km, ls, pair.rel_err};
    // upward three-term recurrence, stable for K
    for (int j = 1; j < n; ++j) {
        double knext = km + (2.0 * (mu + j) / x) * kp;
        km = kp;
        kp = knext;
        if (kp > rescale_at) {
            kp /= rescale_at;
            km /= rescale_at;
            ls += log_rescale;
        }
    }
    return {kp, ls, pair.rel_err + 2e-16 * n};
}

} // namespace

double ln_gamma(double x) {
    if (!std::isfinite(x)) throw std::domain_error("ln_gamma: non-finite argument");
    if (x <= 0.0) throw std::domain_error("ln_gamma: requires x > 0");
    if (x == 1.0 || x == 2.0) return 0.0;

    double shift = 0.0;
    double y = x;
    while (y < 12.0) {
        shift += std::log(y);
        y += 1.0;
    }
    // Stirling series, B_{2k}/(2k(2k-1) y^{2k-1})
    static const double coef[8] = {
        1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,     -1.0 / 1680.0,
        1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,      -3617.0 / 122400.0};
    double r = 1.0 / y;
    double r2 = r * r;
    double series = 0.0;
    double p = r;
    for (double ck : coef) {
        series += ck * p;
        p *= r2;
    }
    double lg = (y - 0.5) * std::log(y) - y + 0.91893853320467274178 /* ln sqrt(2 pi) */ + series;
    return lg - shift;
}

BesselEval bessel_k(double nu, double x, bool scaled) {
    KScaled k = bessel_k_core(nu, x);
    double log_factor = k.log_scale - (scaled ? 0.0 : x);
    double log_value = std::log(k.mantissa) + log_factor;
    if (log_value > 709.0)
        throw std::overflow_error(
            "bessel_k: result exceeds double range; use scaled=true or log_bessel_k");
    double value = k.mantissa * std::exp(log_factor);
    return {value, scaled, std::fabs(value) * k.rel_err};
}

double log_bessel_k(double nu, double x) {
    KScaled k = bessel_k_core(nu, x);
    return std::log(k.mantissa) + k.log_scale - x;
}

} // namespace ncs
