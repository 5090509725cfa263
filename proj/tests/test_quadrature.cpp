#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncs/quadrature.hpp"
#include "ncs/specfun.hpp"

#include <cmath>
#include <vector>

using namespace ncs;

namespace {

// closed-form ln rho_n for the three elementary-oracle families
double oracle_log_moment(FamilyId id, double j, long n) {
    double nd = static_cast<double>(n);
    switch (id) {
        case FamilyId::Glauber: return ln_gamma(nd + 1.0);
        case FamilyId::SU11:
            return ln_gamma(nd + 1.0) + ln_gamma(2.0 * j) - ln_gamma(2.0 * j + nd);
        case FamilyId::BarutGirardello:
            return ln_gamma(nd + 1.0) + ln_gamma(2.0 * j + nd) - ln_gamma(2.0 * j);
        default: throw std::logic_error("no elementary oracle");
    }
}

} // namespace

TEST_CASE("integrate_density on elementary integrands") {
    // integral of 1 over (0,1)
    QuadResult r1 = integrate_density([](double) { return 0.0; }, 0.0, 1.0, 1e-12);
    CHECK(std::fabs(r1.log_value) <= 1e-12);
    CHECK(r1.evaluations > 0);
    CHECK(r1.rel_error_estimate >= 0.0);

    // integral of e^{-t} over (0,inf)
    QuadResult r2 = integrate_density([](double t) { return -t; }, 0.0,
                                      std::numeric_limits<double>::infinity(), 1e-12);
    CHECK(std::fabs(r2.log_value) <= 1e-11);

    // log-singular endpoint: integral of -ln(t) over (0,1) equals 1
    QuadResult r3 = integrate_density(
        [](double t) { return std::log(-std::log(t)); }, 0.0, 1.0, 1e-11);
    CHECK(std::fabs(r3.log_value) <= 1e-10);
}

TEST_CASE("integrate_moment worked examples") {
    BorelMeasure g = measure_for(make_family(FamilyId::Glauber, {}));
    QuadResult q = integrate_moment(g, 3, 1e-11);
    CHECK(std::fabs(q.log_value - std::log(6.0)) <= 1e-10);
    CHECK(q.transform_used == QuadTransform::plain);

    BorelMeasure su = measure_for(make_family(FamilyId::SU11, {{"j", 1.0}}));
    QuadResult qs = integrate_moment(su, 4, 1e-11);
    CHECK(std::fabs(qs.log_value - std::log(0.2)) <= 1e-10);
    CHECK(qs.transform_used == QuadTransform::beta_endpoint);

    BorelMeasure bg = measure_for(make_family(FamilyId::BarutGirardello, {{"j", 1.0}}));
    QuadResult qb = integrate_moment(bg, 2, 1e-9);
    CHECK(std::fabs(qb.log_value - std::log(12.0)) <= 1e-8);
    CHECK(qb.transform_used == QuadTransform::sqrt_bessel);
}

TEST_CASE("oracle agreement and error-estimate honesty, n = 0..20") {
    struct Case {
        FamilyId id;
        double j;
    };
    std::vector<Case> cases = {{FamilyId::Glauber, 0.0}, {FamilyId::SU11, 1.0},
                               {FamilyId::SU11, 2.0},    {FamilyId::BarutGirardello, 0.5},
                               {FamilyId::BarutGirardello, 1.0},
                               {FamilyId::BarutGirardello, 2.0}};
    int total = 0, honest = 0;
    for (const Case& c : cases) {
        std::map<std::string, double> params;
        if (c.id != FamilyId::Glauber) params["j"] = c.j;
        BorelMeasure m = measure_for(make_family(c.id, params));
        for (long n = 0; n <= 20; ++n) {
            QuadResult q = integrate_moment(m, n, 1e-11);
            double expect = oracle_log_moment(c.id, c.j, n);
            double true_rel = std::fabs(std::expm1(q.log_value - expect));
            CAPTURE(static_cast<int>(c.id));
            CAPTURE(c.j);
            CAPTURE(n);
            CHECK(true_rel <= 1e-10);
            ++total;
            if (true_rel <= 10.0 * q.rel_error_estimate) ++honest;
        }
    }
    CHECK(honest >= (total * 99) / 100);
}

TEST_CASE("transform invariance on barut-girardello j=2") {
    FamilySpec fam = make_family(FamilyId::BarutGirardello, {{"j", 2.0}});
    BorelMeasure m = measure_for(fam);
    BorelMeasure plain_variant = m;
    plain_variant.right_behavior = RightBehavior::exp_plain;
    plain_variant.decay_coef = 1.0;
    for (long n = 0; n <= 10; ++n) {
        QuadResult a = integrate_moment(m, n, 1e-10);
        QuadResult b = integrate_moment(plain_variant, n, 1e-10);
        CHECK(a.transform_used == QuadTransform::sqrt_bessel);
        CHECK(b.transform_used == QuadTransform::plain);
        CAPTURE(n);
        CHECK(std::fabs(std::expm1(a.log_value - b.log_value)) <= 1e-8);
    }
}

TEST_CASE("determinism: repeated calls are bit-identical") {
    BorelMeasure m = measure_for(make_family(FamilyId::NCOscillator, {{"tau", 0.1}}));
    for (long n : {0L, 5L, 20L}) {
        QuadResult a = integrate_moment(m, n, 1e-10);
        QuadResult b = integrate_moment(m, n, 1e-10);
        CHECK(a.log_value == b.log_value);
        CHECK(a.rel_error_estimate == b.rel_error_estimate);
        CHECK(a.evaluations == b.evaluations);
    }
}

TEST_CASE("tolerance validation") {
    BorelMeasure g = measure_for(make_family(FamilyId::Glauber, {}));
    CHECK_THROWS_AS(integrate_moment(g, 1, 1e-14), ToleranceError);
    CHECK_THROWS_AS(integrate_moment(g, 1, 1e-2), ToleranceError);
    CHECK_THROWS_AS(integrate_moment(g, -1, 1e-10), std::domain_error);
}

TEST_CASE("sub-unity su11 exponent uses the endpoint substitution") {
    // 2j - 2 = -0.4: integrable (1-t)^{-0.4} endpoint weight
    FamilySpec fam = make_family(FamilyId::SU11, {{"j", 0.8}});
    BorelMeasure m = measure_for(fam);
    for (long n = 0; n <= 8; ++n) {
        QuadResult q = integrate_moment(m, n, 1e-10);
        double expect = oracle_log_moment(FamilyId::SU11, 0.8, n);
        CAPTURE(n);
        CHECK(std::fabs(std::expm1(q.log_value - expect)) <= 1e-9);
    }
}
