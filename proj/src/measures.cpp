#include "ncs/measures.hpp"

#include "ncs/specfun.hpp"

#include <cmath>
#include <limits>

namespace ncs {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = 0.69314718055994530942;
} // namespace

double BorelMeasure::log_density(double t) const {
    if (!(t > 0.0) || !(t < support_hi) || !std::isfinite(t))
        throw std::domain_error("log_density: t outside the open support");
    return log_density_fn(t);
}

double BorelMeasure::density(double t) const { return std::exp(log_density(t)); }

double MellinSmoothFactor::log_at(double x) const {
    if (!(x > 0.0)) throw std::domain_error("MellinSmoothFactor: requires x > 0");
    return kLn2 + power * std::log(x) + log_bessel_k(order, 2.0 * std::sqrt(x));
}

BorelMeasure measure_for(const FamilySpec& family) {
    BorelMeasure m;
    m.family = family;
    switch (family.id) {
        case FamilyId::Glauber:
            m.support_hi = kInf;
            m.left_exponent = 0.0;
            m.has_log_singularity = false;
            m.right_behavior = RightBehavior::exp_plain;
            m.decay_coef = 1.0;
            m.log_density_fn = [](double t) { return -t; };
            break;
        case FamilyId::SU11: {
            m.support_hi = 1.0;
            m.left_exponent = 0.0;
            m.has_log_singularity = false;
            m.right_behavior = RightBehavior::algebraic;
            m.decay_coef = 0.0;
            double j = family.j;
            m.log_density_fn = [j](double t) {
                return std::log(2.0 * j - 1.0) + (2.0 * j - 2.0) * std::log1p(-t);
            };
            break;
        }
        case FamilyId::BarutGirardello: {
            m.support_hi = kInf;
            double j = family.j;
            double order = 2.0 * j - 1.0;
            m.left_exponent = order / 2.0;
            m.has_log_singularity = (order == 0.0);
            m.right_behavior = RightBehavior::exp_sqrt;
            m.decay_coef = 2.0;
            double c0 = kLn2 - ln_gamma(2.0 * j);
            m.log_density_fn = [c0, order](double t) {
                return c0 + 0.5 * order * std::log(t) +
                       log_bessel_k(order, 2.0 * std::sqrt(t));
            };
            break;
        }
        case FamilyId::NCOscillator: {
            m.support_hi = kInf;
            double ae = family.alpha_exp, be = family.beta_exp, tau = family.tau;
            double half_sum = 0.5 * (ae + be);
            double order = be - ae;
            m.left_exponent = half_sum;
            m.has_log_singularity = (order == 0.0);
            m.right_behavior = RightBehavior::exp_sqrt;
            m.decay_coef = 2.0 * std::sqrt(2.0 / tau);
            double c0 = 0.5 * (4.0 + ae + be) * kLn2 - std::log(tau) -
                        ln_gamma(1.0 + be);
            m.log_density_fn = [c0, half_sum, order, tau](double t) {
                return c0 + half_sum * (std::log(t) - std::log(tau)) +
                       log_bessel_k(order, 2.0 * std::sqrt(2.0 * t / tau));
            };
            break;
        }
        case FamilyId::NCPoschlTeller: {
            m.support_hi = kInf;
            double eta = family.eta, tau = family.tau;
            m.left_exponent = eta - 1.0;
            m.has_log_singularity = true; // K_0
            m.right_behavior = RightBehavior::exp_sqrt;
            m.decay_coef = std::sqrt(2.0 / tau);
            double c0 = -eta * std::log(tau) - 2.0 * ln_gamma(eta) -
                        (eta - 1.0) * kLn2;
            m.log_density_fn = [c0, eta, tau](double t) {
                return c0 + (eta - 1.0) * std::log(t) +
                       log_bessel_k(0.0, std::sqrt(2.0 * t / tau));
            };
            break;
        }
    }
    return m;
}

MellinFactorPair mellin_factors(const FamilySpec& fam) {
    if (fam.id != FamilyId::NCOscillator)
        throw std::domain_error(
            "mellin_factors: defined for the nc-oscillator family only");
    MellinFactorPair pair;
    pair.delta_point = fam.tau / 2.0;
    pair.smooth_factor.power = 0.5 * (fam.alpha_exp + fam.beta_exp);
    pair.smooth_factor.order = std::fabs(fam.alpha_exp - fam.beta_exp);
    return pair;
}

BorelMeasure dilate(const MellinSmoothFactor& smooth_factor, double delta_point,
                    double log_norm) {
    if (!(delta_point > 0.0) || !std::isfinite(delta_point))
        throw std::domain_error("dilate: requires delta_point > 0");
    BorelMeasure m;
    m.family = FamilySpec{}; // not tied to a catalog family
    m.support_hi = kInf;
    m.left_exponent = smooth_factor.power;
    m.has_log_singularity = (smooth_factor.order == 0.0);
    m.right_behavior = RightBehavior::exp_sqrt;
    m.decay_coef = 2.0 / std::sqrt(delta_point);
    double s = delta_point;
    double log_s = std::log(s);
    MellinSmoothFactor d = smooth_factor;
    m.log_density_fn = [d, s, log_s, log_norm](double x) {
        return d.log_at(x / s) - log_s - log_norm;
    };
    return m;
}

} // namespace ncs
