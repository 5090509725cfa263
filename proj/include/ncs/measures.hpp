#ifndef NCS_MEASURES_HPP
#define NCS_MEASURES_HPP

#include "ncs/families.hpp"

#include <functional>

namespace ncs {

// How the density behaves at the right end of its support. Drives the
// quadrature transform selection.
enum class RightBehavior {
    algebraic, // (1-t)^{2j-2} on (0,1)               -> beta-type substitution
    exp_sqrt,  // ~ e^{-c sqrt(t)} from a K_nu factor -> u = c sqrt(t)
    exp_plain  // ~ e^{-t}                            -> plain with tail cutoff
};

// Closed-form Borel measure Omega(t) on (0, R), R in {1, +inf}. The density
// is exposed in the log domain; exp(log_density) may underflow for large t,
// which is acceptable.
struct BorelMeasure {
    FamilySpec family;
    double support_hi;        // 1 for SU11, +inf otherwise
    double left_exponent;     // algebraic prefactor exponent p: Omega ~ t^p * K-factor
    bool has_log_singularity; // Bessel order in the density is 0
    RightBehavior right_behavior;
    double decay_coef;        // c in e^{-c sqrt(t)} (exp_sqrt); 1 for exp_plain
    std::function<double(double)> log_density_fn;

    // ln Omega(t); throws std::domain_error outside the open support.
    double log_density(double t) const;
    double density(double t) const; // exp(log_density), may underflow to 0
};

// Smooth Mellin factor D(x) = 2 x^{power} K_{order}(2 sqrt(x)) on (0, inf)
// (the non-delta factor of the noncommutative-oscillator measure).
struct MellinSmoothFactor {
    double power; // (alpha_exp + beta_exp)/2
    double order; // |alpha_exp - beta_exp|
    double log_at(double x) const;
};

// The delta/smooth factor pair whose multiplicative convolution gives the
// noncommutative-oscillator measure: C(u) = delta(u - tau/2), D as above.
struct MellinFactorPair {
    double delta_point; // tau/2
    MellinSmoothFactor smooth_factor;
};

BorelMeasure measure_for(const FamilySpec& family);

MellinFactorPair mellin_factors(const FamilySpec& nc_oscillator_family);

// Multiplicative convolution of D with a unit-mass Dirac at s:
// lambda(x) = D(x/s)/s. log_norm is subtracted from the log density (the
// overall 1/Gamma(1+beta) normalization when reproducing the oscillator
// measure; pass 0 for the raw dilation).
BorelMeasure dilate(const MellinSmoothFactor& smooth_factor, double delta_point,
                    double log_norm = 0.0);

} // namespace ncs

#endif
