#include "ncs/verify.hpp"

#include "ncs/measures.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace ncs {

namespace {

// shortest decimal representation that round-trips to the same double
std::string fmt17(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

nlohmann::json family_to_json(const FamilySpec& f) {
    return {{"id", family_name(f.id)}, {"tau", f.tau},       {"j", f.j},
            {"gamma", f.gamma},        {"epsilon", f.epsilon}};
}

FamilySpec family_from_json(const nlohmann::json& jf) {
    FamilyId id = family_from_name(jf.at("id").get<std::string>());
    std::map<std::string, double> params;
    params["tau"] = jf.at("tau").get<double>();
    params["j"] = jf.at("j").get<double>();
    params["gamma"] = jf.at("gamma").get<double>();
    params["epsilon"] = jf.at("epsilon").get<double>();
    return make_family(id, params);
}

} // namespace

std::string params_string(const FamilySpec& family) {
    switch (family.id) {
        case FamilyId::Glauber: return "-";
        case FamilyId::SU11:
        case FamilyId::BarutGirardello: return "j=" + fmt17(family.j);
        case FamilyId::NCOscillator: return "tau=" + fmt17(family.tau);
        case FamilyId::NCPoschlTeller:
            return "tau=" + fmt17(family.tau) + ";gamma=" + fmt17(family.gamma) +
                   ";epsilon=" + fmt17(family.epsilon);
    }
    return "-";
}

VerificationReport verify_moments(const FamilySpec& family, long n_max,
                                  double tolerance) {
    if (n_max < 0) throw std::domain_error("verify_moments: requires n_max >= 0");
    if (!(tolerance >= 1e-12))
        throw std::invalid_argument("verify_moments: requires tolerance >= 1e-12");

    auto t0 = std::chrono::steady_clock::now();

    VerificationReport report;
    report.family = family;
    report.n_max = n_max;
    report.tolerance = tolerance;

    BorelMeasure measure = measure_for(family);
    MomentSequence rho = log_rho(family, n_max);
    double quad_tol = std::max(1e-13, tolerance / 30.0);

    report.max_rel_error = 0.0;
    bool all_ok = true;
    for (long n = 0; n <= n_max; ++n) {
        MomentCheck chk;
        chk.n = n;
        chk.log_rho_closed = rho.log_rho[static_cast<size_t>(n)];
        try {
            QuadResult q = integrate_moment(measure, n, quad_tol);
            chk.log_moment_quad = q.log_value;
            chk.quad_rel_error_estimate = q.rel_error_estimate;
            chk.quad_evaluations = q.evaluations;
            chk.quad_transform = transform_name(q.transform_used);
            chk.converged = true;
        } catch (const QuadratureError& e) {
            chk.log_moment_quad = e.best_estimate.log_value;
            chk.quad_rel_error_estimate = e.best_estimate.rel_error_estimate;
            chk.quad_evaluations = e.best_estimate.evaluations;
            chk.quad_transform = transform_name(e.best_estimate.transform_used);
            chk.converged = false;
            all_ok = false;
        }
        chk.rel_error =
            std::fabs(std::expm1(chk.log_moment_quad - chk.log_rho_closed));
        if (!std::isfinite(chk.rel_error))
            chk.rel_error = std::numeric_limits<double>::infinity();
        report.max_rel_error = std::max(report.max_rel_error, chk.rel_error);
        report.per_n.push_back(std::move(chk));
    }
    report.passed = all_ok && report.max_rel_error <= tolerance;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

bool verify_positivity(const FamilySpec& family, long grid_size,
                       double* first_failure) {
    if (grid_size < 2)
        throw std::domain_error("verify_positivity: requires grid_size >= 2");
    BorelMeasure m = measure_for(family);

    double t_lo = 1e-6;
    double t_hi;
    if (std::isfinite(m.support_hi)) {
        t_hi = m.support_hi - 1e-6;
    } else {
        // extend until the density drops below the -700 clip
        t_hi = 1.0;
        while (t_hi < 1e12 && m.log_density(t_hi) > -700.0) t_hi *= 2.0;
    }
    double ratio = std::pow(t_hi / t_lo, 1.0 / static_cast<double>(grid_size - 1));
    double t = t_lo;
    for (long i = 0; i < grid_size; ++i, t *= ratio) {
        double ld = m.log_density(std::min(t, t_hi));
        if (!std::isfinite(ld) || ld <= -700.0) {
            if (ld <= -700.0) continue; // clipped, not a positivity failure
            if (first_failure) *first_failure = t;
            return false;
        }
    }
    return true;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    std::string fam = family_name(report.family.id);
    std::string par = params_string(report.family);
    for (const MomentCheck& c : report.per_n)
        os << fam << ' ' << par << ' ' << c.n << ' ' << fmt17(c.log_rho_closed)
           << ' ' << fmt17(c.log_moment_quad) << ' ' << fmt17(c.rel_error) << ' '
           << (c.converged && c.rel_error <= report.tolerance ? "pass" : "fail")
           << '\n';
    os << "# max_rel_error " << fmt17(report.max_rel_error) << " tolerance "
       << fmt17(report.tolerance) << " verdict "
       << (report.passed ? "pass" : "fail") << '\n';
    return os.str();
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "family,params,n,log_rho,log_quad,rel_err,pass\n";
    std::string fam = family_name(report.family.id);
    std::string par = params_string(report.family);
    for (const MomentCheck& c : report.per_n)
        os << fam << ',' << par << ',' << c.n << ',' << fmt17(c.log_rho_closed)
           << ',' << fmt17(c.log_moment_quad) << ',' << fmt17(c.rel_error) << ','
           << (c.converged && c.rel_error <= report.tolerance ? "pass" : "fail")
           << '\n';
    return os.str();
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["family"] = family_to_json(report.family);
    j["params"] = params_string(report.family);
    j["n_max"] = report.n_max;
    j["tolerance"] = report.tolerance;
    j["max_rel_error"] = report.max_rel_error;
    j["passed"] = report.passed;
    j["wall_time_seconds"] = report.wall_time_seconds;
    j["per_n"] = nlohmann::json::array();
    for (const MomentCheck& c : report.per_n)
        j["per_n"].push_back({{"n", c.n},
                              {"log_rho", c.log_rho_closed},
                              {"log_quad", c.log_moment_quad},
                              {"rel_err", c.rel_error},
                              {"quad_rel_err_est", c.quad_rel_error_estimate},
                              {"quad_evals", c.quad_evaluations},
                              {"quad_transform", c.quad_transform},
                              {"converged", c.converged}});
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    VerificationReport r;
    r.family = family_from_json(j.at("family"));
    r.n_max = j.at("n_max").get<long>();
    r.tolerance = j.at("tolerance").get<double>();
    r.max_rel_error = j.at("max_rel_error").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    for (const auto& jc : j.at("per_n")) {
        MomentCheck c;
        c.n = jc.at("n").get<long>();
        c.log_rho_closed = jc.at("log_rho").get<double>();
        c.log_moment_quad = jc.at("log_quad").get<double>();
        c.rel_error = jc.at("rel_err").get<double>();
        c.quad_rel_error_estimate = jc.at("quad_rel_err_est").get<double>();
        c.quad_evaluations = jc.at("quad_evals").get<long>();
        c.quad_transform = jc.at("quad_transform").get<std::string>();
        c.converged = jc.at("converged").get<bool>();
        r.per_n.push_back(std::move(c));
    }
    return r;
}

} // namespace ncs
