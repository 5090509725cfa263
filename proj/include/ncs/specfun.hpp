#ifndef NCS_SPECFUN_HPP
#define NCS_SPECFUN_HPP

#include <stdexcept>

namespace ncs {

// Result of a modified-Bessel evaluation. When `scaled` is set the value is
// e^x * K_nu(x), which stays representable for x up to ~1e4.
struct BesselEval {
    double value;
    bool scaled;
    double abs_error_estimate;
};

// log Gamma(x) for x > 0. Stirling series with upward recurrence below x = 12.
double ln_gamma(double x);

// Modified Bessel function of the second kind, K_nu(x), real order.
// K_{-nu} = K_nu, so the sign of nu is ignored. Throws std::domain_error for
// x <= 0 or non-finite input, std::overflow_error when the requested value
// leaves the representable range (use scaled=true or log_bessel_k instead).
BesselEval bessel_k(double nu, double x, bool scaled = false);

// ln K_nu(x). Never over/underflows: the order recurrence is carried with an
// explicit log-scale factor, so huge orders at tiny arguments are fine.
double log_bessel_k(double nu, double x);

} // namespace ncs

#endif
