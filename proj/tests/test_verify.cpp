#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncs/verify.hpp"

#include <algorithm>
#include <cmath>

using namespace ncs;

TEST_CASE("glauber moments verify to 1e-10") {
    FamilySpec g = make_family(FamilyId::Glauber, {});
    VerificationReport r = verify_moments(g, 10, 1e-10);
    CHECK(r.passed);
    CHECK(r.per_n.size() == 11);
    CHECK(r.max_rel_error <= 1e-10);
    for (size_t i = 0; i < r.per_n.size(); ++i) {
        CHECK(r.per_n[i].n == static_cast<long>(i));
        CHECK(r.per_n[i].converged);
        CHECK(r.per_n[i].rel_error <= 1e-10);
    }
    CHECK(r.wall_time_seconds > 0.0);
}

TEST_CASE("passed iff max_rel_error within tolerance") {
    FamilySpec su = make_family(FamilyId::SU11, {{"j", 1.5}});
    VerificationReport r = verify_moments(su, 8, 1e-10);
    CHECK(r.passed == (r.max_rel_error <= r.tolerance));
    CHECK(r.passed);
    double max_seen = 0.0;
    for (const auto& c : r.per_n) max_seen = std::max(max_seen, c.rel_error);
    CHECK(r.max_rel_error == max_seen);
}

TEST_CASE("n = 0 entry shows no n-growth pathology") {
    FamilySpec ho = make_family(FamilyId::NCOscillator, {{"tau", 0.1}});
    VerificationReport r = verify_moments(ho, 15, 1e-8);
    CHECK(r.passed);
    // the normalization check must be among the smallest errors in the report
    std::vector<double> errs;
    for (const auto& c : r.per_n) errs.push_back(c.rel_error);
    std::sort(errs.begin(), errs.end());
    size_t median_idx = errs.size() / 2;
    CHECK(r.per_n[0].rel_error <= errs[median_idx]);
}

TEST_CASE("verify_moments argument validation") {
    FamilySpec g = make_family(FamilyId::Glauber, {});
    CHECK_THROWS_AS(verify_moments(g, -1, 1e-10), std::domain_error);
    CHECK_THROWS_AS(verify_moments(g, 5, 1e-13), std::invalid_argument);
}

TEST_CASE("verify_positivity") {
    double bad = 0.0;
    CHECK(verify_positivity(make_family(FamilyId::Glauber, {}), 100, &bad));
    CHECK(verify_positivity(make_family(FamilyId::SU11, {{"j", 2.0}}), 100, &bad));
    CHECK(verify_positivity(make_family(FamilyId::NCOscillator, {{"tau", 0.5}}), 200,
                            &bad));
    CHECK(verify_positivity(
        make_family(FamilyId::NCPoschlTeller,
                    {{"tau", 0.2}, {"gamma", 0.2}, {"epsilon", 0.2}}),
        200, &bad));
    CHECK_THROWS_AS(verify_positivity(make_family(FamilyId::Glauber, {}), 1),
                    std::domain_error);
}

TEST_CASE("report serialization round-trips losslessly") {
    FamilySpec pt = make_family(FamilyId::NCPoschlTeller,
                                {{"tau", 0.2}, {"gamma", 0.2}, {"epsilon", 0.2}});
    VerificationReport r = verify_moments(pt, 5, 1e-8);
    VerificationReport back = report_from_json(report_to_json(r));
    CHECK(back == r);
}

TEST_CASE("text and csv emission have the frozen field layout") {
    FamilySpec su = make_family(FamilyId::SU11, {{"j", 1.0}});
    VerificationReport r = verify_moments(su, 2, 1e-10);

    std::string text = report_to_text(r);
    CHECK(text.find("su11 j=1 0 ") == 0); // family params n ...
    CHECK(text.find(" pass\n") != std::string::npos);

    std::string csv = report_to_csv(r);
    CHECK(csv.rfind("family,params,n,log_rho,log_quad,rel_err,pass\n", 0) == 0);
    // one header + one line per n
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3);
}
