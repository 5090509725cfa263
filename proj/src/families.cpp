#include "ncs/families.hpp"

#include "ncs/specfun.hpp"

#include <cmath>
#include <limits>

namespace ncs {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double require(const std::map<std::string, double>& params, const std::string& key,
               FamilyId id) {
    auto it = params.find(key);
    if (it == params.end())
        throw ParameterError(std::string(family_name(id)) + ": missing parameter '" +
                             key + "'");
    if (!std::isfinite(it->second))
        throw ParameterError(std::string(family_name(id)) + ": parameter '" + key +
                             "' must be finite");
    return it->second;
}

double get_or(const std::map<std::string, double>& params, const std::string& key,
              double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::Glauber: return "glauber";
        case FamilyId::SU11: return "su11";
        case FamilyId::BarutGirardello: return "barut-girardello";
        case FamilyId::NCOscillator: return "nc-oscillator";
        case FamilyId::NCPoschlTeller: return "nc-poschl-teller";
    }
    return "?";
}

FamilyId family_from_name(const std::string& name) {
    for (FamilyId id : {FamilyId::Glauber, FamilyId::SU11, FamilyId::BarutGirardello,
                        FamilyId::NCOscillator, FamilyId::NCPoschlTeller})
        if (name == family_name(id)) return id;
    throw ParameterError("unknown family '" + name +
                         "' (expected glauber, su11, barut-girardello, "
                         "nc-oscillator or nc-poschl-teller)");
}

FamilySpec make_family(FamilyId id, const std::map<std::string, double>& params) {
    FamilySpec spec;
    spec.id = id;
    switch (id) {
        case FamilyId::Glauber:
            break;
        case FamilyId::SU11:
            spec.j = require(params, "j", id);
            if (!(2.0 * spec.j > 1.0))
                throw ParameterError("su11: requires 2j > 1 (got j = " +
                                     std::to_string(spec.j) + ")");
            break;
        case FamilyId::BarutGirardello:
            spec.j = require(params, "j", id);
            if (!(2.0 * spec.j >= 1.0))
                throw ParameterError("barut-girardello: requires 2j >= 1 (got j = " +
                                     std::to_string(spec.j) + ")");
            break;
        case FamilyId::NCOscillator:
            spec.tau = require(params, "tau", id);
            if (!(spec.tau > 0.0))
                throw ParameterError("nc-oscillator: requires tau > 0");
            spec.alpha_exp = 0.0;
            spec.beta_exp = 1.0 + 2.0 / spec.tau;
            break;
        case FamilyId::NCPoschlTeller:
            spec.tau = require(params, "tau", id);
            if (!(spec.tau > 0.0))
                throw ParameterError("nc-poschl-teller: requires tau > 0");
            spec.gamma = get_or(params, "gamma", 0.0);
            spec.epsilon = get_or(params, "epsilon", 0.0);
            if (!(1.0 + 4.0 * spec.gamma / spec.tau >= 0.0))
                throw ParameterError("nc-poschl-teller: requires 1 + 4*gamma/tau >= 0");
            if (!(1.0 + 4.0 * spec.epsilon / spec.tau >= 0.0))
                throw ParameterError("nc-poschl-teller: requires 1 + 4*epsilon/tau >= 0");
            spec.a = 0.5 * std::sqrt(1.0 + 4.0 * spec.gamma / spec.tau);
            spec.b = 0.5 * std::sqrt(1.0 + 4.0 * spec.epsilon / spec.tau);
            spec.eta = (3.0 + spec.a + spec.b) / 2.0;
            break;
    }
    return spec;
}

double eigenvalue(const FamilySpec& family, long n) {
    if (n < 1) throw std::domain_error("eigenvalue: requires n >= 1");
    double nd = static_cast<double>(n);
    switch (family.id) {
        case FamilyId::Glauber: return nd;
        case FamilyId::SU11: return nd / (2.0 * family.j + nd - 1.0);
        case FamilyId::BarutGirardello: return nd * (2.0 * family.j + nd - 1.0);
        case FamilyId::NCOscillator:
            return nd * (1.0 + family.tau * (1.0 + nd) / 2.0);
        case FamilyId::NCPoschlTeller: {
            double q = nd + family.eta - 1.0;
            return 2.0 * family.tau * q * q;
        }
    }
    throw std::logic_error("eigenvalue: unreachable");
}

MomentSequence log_rho(const FamilySpec& family, long n_max) {
    if (n_max < 0) throw std::domain_error("log_rho: requires n_max >= 0");
    MomentSequence seq;
    seq.family = family;
    seq.log_rho.resize(static_cast<size_t>(n_max) + 1);
    seq.log_rho[0] = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        double nd = static_cast<double>(n);
        double v = 0.0;
        switch (family.id) {
            case FamilyId::Glauber:
                v = ln_gamma(nd + 1.0);
                break;
            case FamilyId::SU11:
                v = ln_gamma(nd + 1.0) + ln_gamma(2.0 * family.j) -
                    ln_gamma(2.0 * family.j + nd);
                break;
            case FamilyId::BarutGirardello:
                v = ln_gamma(nd + 1.0) + ln_gamma(2.0 * family.j + nd) -
                    ln_gamma(2.0 * family.j);
                break;
            case FamilyId::NCOscillator:
                v = nd * std::log(family.tau / 2.0) + ln_gamma(nd + 1.0) +
                    ln_gamma(nd + family.beta_exp + 1.0) -
                    ln_gamma(family.beta_exp + 1.0);
                break;
            case FamilyId::NCPoschlTeller:
                v = nd * std::log(2.0 * family.tau) +
                    2.0 * (ln_gamma(nd + family.eta) - ln_gamma(family.eta));
                break;
        }
        seq.log_rho[static_cast<size_t>(n)] = v;
    }
    return seq;
}

double radius_of_convergence(const FamilySpec& family) {
    return family.id == FamilyId::SU11 ? 1.0 : kInf;
}

double normalization(const FamilySpec& family, double abs_alpha_sq) {
    if (!(abs_alpha_sq >= 0.0) || !std::isfinite(abs_alpha_sq))
        throw std::domain_error("normalization: requires |alpha|^2 >= 0");
    if (abs_alpha_sq >= radius_of_convergence(family))
        throw DivergenceError(
            std::string(family_name(family.id)) +
            ": normalization series diverges for |alpha|^2 >= " +
            std::to_string(radius_of_convergence(family)));
    if (abs_alpha_sq == 0.0) return 1.0;

    double log_t = std::log(abs_alpha_sq);
    // running log-sum-exp over terms t_n = n log|alpha|^2 - log rho_n
    double log_sum = 0.0;    // n = 0 term
    double log_term = 0.0;
    double log_rho_n = 0.0;
    const long n_cap = 100000;
    for (long n = 1; n <= n_cap; ++n) {
        log_rho_n += std::log(eigenvalue(family, n));
        log_term = static_cast<double>(n) * log_t - log_rho_n;
        double m = std::max(log_sum, log_term);
        log_sum = m + std::log(std::exp(log_sum - m) + std::exp(log_term - m));
        // geometric tail bound with ratio r = |alpha|^2 / e_{n+1}
        double r = abs_alpha_sq / eigenvalue(family, n + 1);
        if (r < 1.0) {
            double log_tail = log_term + std::log(r / (1.0 - r));
            if (log_tail < log_sum + std::log(1e-16)) break;
        }
    }
    return std::exp(log_sum);
}

} // namespace ncs
