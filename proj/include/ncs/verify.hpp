#ifndef NCS_VERIFY_HPP
#define NCS_VERIFY_HPP

#include "ncs/families.hpp"
#include "ncs/quadrature.hpp"

#include <string>
#include <vector>

namespace ncs {

// One moment-constraint check: quadrature of the n-th moment of the Borel
// measure against the closed-form ln rho_n.
struct MomentCheck {
    long n = 0;
    double log_rho_closed = 0.0;
    double log_moment_quad = 0.0;
    double rel_error = 0.0;
    double quad_rel_error_estimate = 0.0;
    long quad_evaluations = 0;
    std::string quad_transform;
    bool converged = true; // false when quadrature raised non-convergence

    bool operator==(const MomentCheck&) const = default;
};

struct VerificationReport {
    FamilySpec family;
    long n_max = 0;
    double tolerance = 0.0;
    std::vector<MomentCheck> per_n; // n = 0..n_max, ordered
    double max_rel_error = 0.0;
    bool passed = false; // max_rel_error <= tolerance and all entries converged
    double wall_time_seconds = 0.0;

    bool operator==(const VerificationReport&) const = default;
};

// Checks the moment constraint integral(t^n Omega) = rho_n for n = 0..n_max.
// Quadrature non-convergence becomes a failed entry, never a crash.
VerificationReport verify_moments(const FamilySpec& family, long n_max,
                                  double tolerance);

// True iff ln Omega is finite at every point of a log-spaced grid across the
// support (clipped to where ln Omega > -700). On failure the first offending
// t is stored in *first_failure.
bool verify_positivity(const FamilySpec& family, long grid_size,
                       double* first_failure = nullptr);

// One record per line, fixed field order:
//   family params n log_rho log_quad rel_err pass
std::string report_to_text(const VerificationReport& report);

// Machine-readable document keyed identically to the text records;
// round-trips losslessly through report_from_json.
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& json_text);

// CSV with header family,params,n,log_rho,log_quad,rel_err,pass
std::string report_to_csv(const VerificationReport& report);

std::string params_string(const FamilySpec& family);

} // namespace ncs

#endif
