#ifndef NCS_FAMILIES_HPP
#define NCS_FAMILIES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncs {

// A family parameter violates its admissible range; the message names the
// violated constraint.
class ParameterError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// The normalization series diverges at the requested |alpha|^2 (reachable
// only for the SU(1,1) family, whose radius of convergence is 1).
class DivergenceError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class FamilyId { Glauber, SU11, BarutGirardello, NCOscillator, NCPoschlTeller };

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name); // throws ParameterError

// A validated coherent-state family with all derived quantities populated.
//
//   Glauber           : no parameters,           e_n = n
//   SU11              : j with 2j > 1,           e_n = n/(2j+n-1)
//   BarutGirardello   : j with 2j >= 1,          e_n = n(2j+n-1)
//   NCOscillator      : tau > 0,                 e_n = n(1 + tau(1+n)/2)
//   NCPoschlTeller    : tau > 0, gamma, epsilon, e_n = 2 tau (n+eta-1)^2
//
// Derived: beta_exp = 1 + 2/tau (NCOscillator; the measure's Bessel order is
// beta_exp - alpha_exp with alpha_exp = 0); a = sqrt(1+4 gamma/tau)/2,
// b = sqrt(1+4 epsilon/tau)/2, eta = (3+a+b)/2 (NCPoschlTeller).
struct FamilySpec {
    FamilyId id = FamilyId::Glauber;
    double tau = 0.0;
    double j = 0.0;
    double gamma = 0.0;
    double epsilon = 0.0;
    // derived
    double alpha_exp = 0.0;
    double beta_exp = 0.0;
    double a = 0.0;
    double b = 0.0;
    double eta = 0.0;

    bool operator==(const FamilySpec&) const = default;
};

FamilySpec make_family(FamilyId id, const std::map<std::string, double>& params);

struct MomentSequence {
    FamilySpec family;
    std::vector<double> log_rho; // index n = 0..N, log_rho[0] == 0
};

// e_n = rho_n / rho_{n-1} for n >= 1.
double eigenvalue(const FamilySpec& family, long n);

// Closed Gamma-form ln rho_n for n = 0..n_max (not the running product).
MomentSequence log_rho(const FamilySpec& family, long n_max);

// Radius of convergence of the normalization series in the |alpha|^2
// variable: 1 for SU11, +infinity otherwise.
double radius_of_convergence(const FamilySpec& family);

// N = sum_n |alpha|^{2n} / rho_n, summed in the log domain with a certified
// geometric tail bound below 1e-16 relative.
double normalization(const FamilySpec& family, double abs_alpha_sq);

} // namespace ncs

#endif
