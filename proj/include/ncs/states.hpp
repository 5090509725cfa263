#ifndef NCS_STATES_HPP
#define NCS_STATES_HPP

#include "ncs/families.hpp"

#include <complex>
#include <vector>

namespace ncs {

// Truncated nonlinear coherent state. Coefficients are carried as
// (log-magnitude, phase) pairs; c_n = alpha^n / sqrt(rho_n * N).
class CoherentState {
  public:
    FamilySpec family;
    std::complex<double> alpha;
    long truncation = 0;            // N, coefficients cover n = 0..N
    std::vector<double> log_mag;    // ln |c_n|
    std::vector<double> phase;      // arg c_n = n arg alpha (exact phase arithmetic)
    double norm_residual = 0.0;     // 1 - sum |c_n|^2

    std::complex<double> coeff(long n) const;
    double prob(long n) const; // |c_n|^2
};

// Smallest truncation with norm_residual < tol (search doubles N until the
// geometric tail bound certifies the tolerance, then shrinks back).
CoherentState build_state(const FamilySpec& family, std::complex<double> alpha,
                          double tol);

// <s1|s2> over the common truncation; requires identical family parameters.
std::complex<double> overlap(const CoherentState& s1, const CoherentState& s2);

} // namespace ncs

#endif
