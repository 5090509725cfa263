#ifndef NCS_QUADRATURE_HPP
#define NCS_QUADRATURE_HPP

#include "ncs/measures.hpp"

#include <functional>
#include <stdexcept>

namespace ncs {

enum class QuadTransform { beta_endpoint, sqrt_bessel, plain };

const char* transform_name(QuadTransform t);

struct QuadResult {
    double log_value;          // ln of the (positive) integral
    double rel_error_estimate; // >= 0
    long evaluations;
    QuadTransform transform_used;
};

// Requested tolerance below the 1e-13 floor (or above 1e-3).
class ToleranceError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Adaptive refinement did not reach the target; carries the best estimate.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& msg, QuadResult best)
        : std::runtime_error(msg), best_estimate(best) {}
    QuadResult best_estimate;
};

// Shared kernel: integrate exp(log_integrand) over the open interval
// (lo, hi), hi possibly +inf (an exponential-decay tail cutoff is then
// located by a deterministic log-grid scan). Accumulation is in the log
// domain throughout; results are deterministic for identical inputs.
QuadResult integrate_density(const std::function<double(double)>& log_integrand,
                             double lo, double hi, double target_rel_tol,
                             QuadTransform tag = QuadTransform::plain);

// ln of the n-th moment integral of a Borel measure. The substitution is
// selected from the measure's singularity metadata:
//   algebraic  -> beta_endpoint (right-endpoint weight absorbed when 2j < 2)
//   exp_sqrt   -> sqrt_bessel   (u = c sqrt(t), integrand u^p K_nu(u)-like)
//   exp_plain  -> plain         (tail cutoff in t)
QuadResult integrate_moment(const BorelMeasure& measure, long n,
                            double target_rel_tol);

} // namespace ncs

#endif
