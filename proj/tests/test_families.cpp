#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncs/families.hpp"
#include "ncs/specfun.hpp"

#include <cmath>

using namespace ncs;

TEST_CASE("make_family populates derived quantities") {
    FamilySpec ho = make_family(FamilyId::NCOscillator, {{"tau", 0.1}});
    CHECK(ho.beta_exp == doctest::Approx(21.0).epsilon(1e-15));
    CHECK(ho.alpha_exp == 0.0);

    FamilySpec pt = make_family(FamilyId::NCPoschlTeller,
                                {{"tau", 0.2}, {"gamma", 0.2}, {"epsilon", 0.2}});
    CHECK(pt.a == doctest::Approx(0.5 * std::sqrt(5.0)).epsilon(1e-15));
    CHECK(pt.b == doctest::Approx(0.5 * std::sqrt(5.0)).epsilon(1e-15));
    CHECK(pt.eta == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    CHECK(pt.eta == doctest::Approx(2.6180339887498948482).epsilon(1e-12));
}

TEST_CASE("make_family rejects out-of-range parameters") {
    CHECK_THROWS_AS(make_family(FamilyId::SU11, {{"j", 0.5}}), ParameterError);
    CHECK_THROWS_AS(make_family(FamilyId::SU11, {{"j", 0.2}}), ParameterError);
    CHECK_THROWS_AS(make_family(FamilyId::SU11, {}), ParameterError);
    CHECK_THROWS_AS(make_family(FamilyId::BarutGirardello, {{"j", 0.3}}),
                    ParameterError);
    CHECK_NOTHROW(make_family(FamilyId::BarutGirardello, {{"j", 0.5}}));
    CHECK_THROWS_AS(make_family(FamilyId::NCOscillator, {{"tau", 0.0}}),
                    ParameterError);
    CHECK_THROWS_AS(make_family(FamilyId::NCOscillator, {{"tau", -1.0}}),
                    ParameterError);
    CHECK_THROWS_AS(
        make_family(FamilyId::NCPoschlTeller, {{"tau", 0.2}, {"gamma", -1.0}}),
        ParameterError);
    // error message names the violated constraint
    try {
        make_family(FamilyId::SU11, {{"j", 0.5}});
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("2j > 1") != std::string::npos);
    }
}

TEST_CASE("family name round trip") {
    for (FamilyId id : {FamilyId::Glauber, FamilyId::SU11, FamilyId::BarutGirardello,
                        FamilyId::NCOscillator, FamilyId::NCPoschlTeller})
        CHECK(family_from_name(family_name(id)) == id);
    CHECK_THROWS_AS(family_from_name("bogus"), ParameterError);
}

TEST_CASE("eigenvalue examples") {
    FamilySpec g = make_family(FamilyId::Glauber, {});
    CHECK(eigenvalue(g, 7) == 7.0);

    FamilySpec ho = make_family(FamilyId::NCOscillator, {{"tau", 0.1}});
    CHECK(eigenvalue(ho, 2) == doctest::Approx(2.3).epsilon(1e-15));

    FamilySpec pt = make_family(FamilyId::NCPoschlTeller,
                                {{"tau", 0.2}, {"gamma", 0.2}, {"epsilon", 0.2}});
    CHECK(eigenvalue(pt, 1) == doctest::Approx(0.4 * pt.eta * pt.eta).epsilon(1e-15));
    CHECK(eigenvalue(pt, 1) == doctest::Approx(2.7416407864998738178).epsilon(1e-12));

    CHECK_THROWS_AS(eigenvalue(g, 0), std::domain_error);
    CHECK_THROWS_AS(eigenvalue(g, -3), std::domain_error);
}

TEST_CASE("log_rho examples") {
    FamilySpec g = make_family(FamilyId::Glauber, {});
    CHECK(log_rho(g, 3).log_rho[3] == doctest::Approx(std::log(6.0)).epsilon(1e-14));

    FamilySpec ho = make_family(FamilyId::NCOscillator, {{"tau", 0.1}});
    CHECK(log_rho(ho, 2).log_rho[2] ==
          doctest::Approx(std::log(2.53)).epsilon(1e-13));

    FamilySpec su = make_family(FamilyId::SU11, {{"j", 1.0}});
    CHECK(log_rho(su, 4).log_rho[4] == doctest::Approx(std::log(0.2)).epsilon(1e-13));
}

TEST_CASE("log_rho[0] is exactly zero") {
    for (auto fam : {make_family(FamilyId::Glauber, {}),
                     make_family(FamilyId::SU11, {{"j", 1.5}}),
                     make_family(FamilyId::BarutGirardello, {{"j", 0.5}}),
                     make_family(FamilyId::NCOscillator, {{"tau", 0.05}}),
                     make_family(FamilyId::NCPoschlTeller,
                                 {{"tau", 0.1}, {"gamma", 0.3}, {"epsilon", 0.05}})})
        CHECK(log_rho(fam, 10).log_rho[0] == 0.0);
}

TEST_CASE("closed Gamma form vs running eigenvalue product, n <= 50") {
    for (auto fam : {make_family(FamilyId::Glauber, {}),
                     make_family(FamilyId::SU11, {{"j", 1.0}}),
                     make_family(FamilyId::SU11, {{"j", 3.0}}),
                     make_family(FamilyId::BarutGirardello, {{"j", 0.5}}),
                     make_family(FamilyId::BarutGirardello, {{"j", 2.0}}),
                     make_family(FamilyId::NCOscillator, {{"tau", 0.05}}),
                     make_family(FamilyId::NCOscillator, {{"tau", 0.5}}),
                     make_family(FamilyId::NCPoschlTeller,
                                 {{"tau", 0.2}, {"gamma", 0.2}, {"epsilon", 0.2}})}) {
        MomentSequence seq = log_rho(fam, 50);
        double running = 0.0;
        for (long n = 1; n <= 50; ++n) {
            running += std::log(eigenvalue(fam, n));
            double scale = std::max(1.0, std::fabs(running));
            CAPTURE(family_name(fam.id));
            CAPTURE(n);
            CHECK(std::fabs(seq.log_rho[static_cast<size_t>(n)] - running) <=
                  1e-10 * scale);
        }
    }
}

TEST_CASE("radius of convergence") {
    CHECK(std::isinf(radius_of_convergence(make_family(FamilyId::Glauber, {}))));
    CHECK(radius_of_convergence(make_family(FamilyId::SU11, {{"j", 1.0}})) == 1.0);
    CHECK(radius_of_convergence(make_family(FamilyId::SU11, {{"j", 2.5}})) == 1.0);
    CHECK(std::isinf(
        radius_of_convergence(make_family(FamilyId::BarutGirardello, {{"j", 1.0}}))));
    CHECK(std::isinf(
        radius_of_convergence(make_family(FamilyId::NCOscillator, {{"tau", 0.5}}))));
    CHECK(std::isinf(radius_of_convergence(
        make_family(FamilyId::NCPoschlTeller, {{"tau", 0.2}}))));
}

TEST_CASE("normalization examples") {
    FamilySpec g = make_family(FamilyId::Glauber, {});
    CHECK(normalization(g, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(normalization(g, 0.0) == 1.0);

    FamilySpec su = make_family(FamilyId::SU11, {{"j", 1.0}});
    CHECK(normalization(su, 0.5) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(normalization(su, 0.0) == 1.0);

    CHECK_THROWS_AS(normalization(su, 1.0), DivergenceError);
    CHECK_THROWS_AS(normalization(su, 1.7), DivergenceError);
    CHECK_THROWS_AS(normalization(g, -0.1), std::domain_error);
}

TEST_CASE("normalization is strictly increasing and diverges toward R for su11") {
    FamilySpec ho = make_family(FamilyId::NCOscillator, {{"tau", 0.1}});
    double prev = 0.0;
    for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        double v = normalization(ho, t);
        CHECK(v > prev);
        prev = v;
    }
    FamilySpec su = make_family(FamilyId::SU11, {{"j", 1.0}});
    double n1 = normalization(su, 0.9);
    double n2 = normalization(su, 0.99);
    double n3 = normalization(su, 0.999);
    CHECK(n3 > n2);
    CHECK(n2 > n1);
}
