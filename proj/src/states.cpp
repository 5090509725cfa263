#include "ncs/states.hpp"

#include <cmath>
#include <limits>

namespace ncs {

namespace {

// ln of the normalization series (same certified tail bound as
// families::normalization).
double log_normalization(const FamilySpec& family, double r2) {
    if (r2 == 0.0) return 0.0;
    double log_t = std::log(r2);
    double log_sum = 0.0;
    double log_rho_n = 0.0;
    const long n_cap = 1000000;
    for (long n = 1; n <= n_cap; ++n) {
        log_rho_n += std::log(eigenvalue(family, n));
        double log_term = static_cast<double>(n) * log_t - log_rho_n;
        double m = std::max(log_sum, log_term);
        log_sum = m + std::log(std::exp(log_sum - m) + std::exp(log_term - m));
        double r = r2 / eigenvalue(family, n + 1);
        if (r < 1.0 && log_term + std::log(r / (1.0 - r)) < log_sum + std::log(1e-16))
            break;
    }
    return log_sum;
}

// Certified bound on sum_{n > N} |alpha|^{2n} / (rho_n * Normalization),
// i.e. on the norm residual at truncation N. Returns ln of the bound.
double log_residual_bound(const FamilySpec& family,
                          const std::vector<double>& log_rho_vals, double log_r2,
                          double log_norm, long trunc) {
    double r2 = std::exp(log_r2);
    double ratio = r2 / eigenvalue(family, trunc + 2);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    double log_first = static_cast<double>(trunc + 1) * log_r2 -
                       log_rho_vals[static_cast<size_t>(trunc + 1)];
    return log_first + std::log(1.0 / (1.0 - ratio)) - log_norm;
}

} // namespace

std::complex<double> CoherentState::coeff(long n) const {
    if (n < 0 || n > truncation) return {0.0, 0.0};
    double m = std::exp(log_mag[static_cast<size_t>(n)]);
    double p = phase[static_cast<size_t>(n)];
    return {m * std::cos(p), m * std::sin(p)};
}

double CoherentState::prob(long n) const {
    if (n < 0 || n > truncation) return 0.0;
    return std::exp(2.0 * log_mag[static_cast<size_t>(n)]);
}

CoherentState build_state(const FamilySpec& family, std::complex<double> alpha,
                          double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("build_state: requires tol > 0");
    double r2 = std::norm(alpha);
    if (r2 >= radius_of_convergence(family))
        throw DivergenceError(std::string(family_name(family.id)) +
                              ": |alpha|^2 outside the convergence domain");

    CoherentState s;
    s.family = family;
    s.alpha = alpha;

    if (r2 == 0.0) {
        s.truncation = 0;
        s.log_mag = {0.0};
        s.phase = {0.0};
        s.norm_residual = 0.0;
        return s;
    }

    double log_r2 = std::log(r2);
    double log_norm = log_normalization(family, r2);
    double log_tol = std::log(tol);

    // double the truncation until the geometric tail bound certifies tol,
    // then binary-search the smallest such N
    long hi = 1;
    std::vector<double> lr = log_rho(family, hi + 2).log_rho;
    while (log_residual_bound(family, lr, log_r2, log_norm, hi) >= log_tol) {
        hi *= 2;
        if (hi > (1L << 22))
            throw std::runtime_error("build_state: truncation search exceeded 2^22");
        lr = log_rho(family, hi + 2).log_rho;
    }
    long lo = 0;
    while (lo < hi) {
        long mid = (lo + hi) / 2;
        if (log_residual_bound(family, lr, log_r2, log_norm, mid) < log_tol)
            hi = mid;
        else
            lo = mid + 1;
    }
    long trunc = hi;

    s.truncation = trunc;
    s.log_mag.resize(static_cast<size_t>(trunc) + 1);
    s.phase.resize(static_cast<size_t>(trunc) + 1);
    double arg = std::arg(alpha);
    double sum = 0.0; // sum of |c_n|^2, accumulated in increasing n
    for (long n = 0; n <= trunc; ++n) {
        double lm = 0.5 * (static_cast<double>(n) * log_r2 -
                           lr[static_cast<size_t>(n)] - log_norm);
        s.log_mag[static_cast<size_t>(n)] = lm;
        s.phase[static_cast<size_t>(n)] = static_cast<double>(n) * arg;
        sum += std::exp(2.0 * lm);
    }
    s.norm_residual = std::max(0.0, 1.0 - sum);
    return s;
}

std::complex<double> overlap(const CoherentState& s1, const CoherentState& s2) {
    if (!(s1.family == s2.family))
        throw std::invalid_argument("overlap: states belong to different families");
    long n_common = std::min(s1.truncation, s2.truncation);
    std::complex<double> acc{0.0, 0.0};
    for (long n = 0; n <= n_common; ++n) {
        size_t k = static_cast<size_t>(n);
        double mag = std::exp(s1.log_mag[k] + s2.log_mag[k]);
        double ph = s2.phase[k] - s1.phase[k];
        acc += std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
    return acc;
}

} // namespace ncs
