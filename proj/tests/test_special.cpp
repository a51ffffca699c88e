#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhi/special.hpp"

#include <cmath>

namespace {

// Independent gamma oracle: Simpson on the integral definition after the
// grading t = u^2 (smooths the origin for non-integer exponents).
double gamma_integral_oracle(double x) {
    const double p = x - 1.0;
    const int n = 40000;
    const double U = 9.0;
    const double h = U / n;
    double sum = 0.0;
    auto f = [p](double u) {
        if (u == 0.0) return 0.0;
        return 2.0 * std::pow(u, 2.0 * p + 1.0) * std::exp(-u * u);
    };
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * f(i * h);
    }
    return sum * h / 3.0;
}

// Direct hypergeometric series, no transformations.
double series_2f1_oracle(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 200000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

// 40-term ascending series for J (oracle only; small arguments).
double j_series_oracle(double mu, double t) {
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
        const double lt = (mu + 2 * k) * std::log(t / 2.0) - std::lgamma(k + 1.0) -
                          std::lgamma(mu + k + 1.0);
        sum += (k % 2 ? -1.0 : 1.0) * std::exp(lt);
    }
    return sum;
}

} // namespace

TEST_CASE("gamma basic values") {
    CHECK(lhi::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lhi::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
    CHECK(lhi::gamma(3.2) ==
          doctest::Approx(gamma_integral_oracle(3.2)).epsilon(1e-9));
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(lhi::gamma(0.0), lhi::PoleError);
    CHECK_THROWS_AS(lhi::gamma(-3.0), lhi::PoleError);
    CHECK_NOTHROW(lhi::gamma(-0.5));
}

TEST_CASE("gamma recurrence") {
    for (double x = 0.1; x <= 40.0; x += 0.7) {
        CHECK(lhi::gamma(x + 1.0) ==
              doctest::Approx(x * lhi::gamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("2f1 basic values") {
    CHECK(lhi::gauss_2f1(0.7, -1.2, 0.9, 0.0) == 1.0);
    CHECK(lhi::gauss_2f1(1, 1, 2, 0.3) ==
          doctest::Approx(-std::log(0.7) / 0.3).epsilon(1e-13));
    CHECK(lhi::gauss_2f1(0.4, -0.9, 1.3, 0.6) ==
          doctest::Approx(series_2f1_oracle(0.4, -0.9, 1.3, 0.6)).epsilon(1e-11));
}

TEST_CASE("2f1 transformations agree with direct series") {
    // The implementation switches representation at z = -0.5 and z = 0.5;
    // check both sides of each crossover against direct summation.
    for (double z : {-0.9, -0.6, -0.4, 0.45, 0.55, 0.8}) {
        CHECK(lhi::gauss_2f1(0.35, 0.6, 1.45, z) ==
              doctest::Approx(series_2f1_oracle(0.35, 0.6, 1.45, z)).epsilon(1e-10));
    }
}

TEST_CASE("2f1 domain and parameter errors") {
    CHECK_THROWS_AS(lhi::gauss_2f1(0.4, 0.5, 1.1, 1.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::gauss_2f1(0.4, 0.5, 1.1, -1.3), lhi::DomainError);
    CHECK_THROWS_AS(lhi::gauss_2f1(0.4, 0.5, -1.0, 0.3), lhi::ParameterError);
    // terminating numerator cancels the c pole
    CHECK_NOTHROW(lhi::gauss_2f1(-1.0, 0.5, -2.0, 0.3));
}

TEST_CASE("bessel basic values") {
    using lhi::BesselKind;
    CHECK(lhi::bessel(BesselKind::J, 0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(lhi::bessel(BesselKind::K, 0.5, 2.0) ==
          doctest::Approx(std::sqrt(M_PI / 4.0) * std::exp(-2.0)).epsilon(1e-12));
    const double mu = 0.3, t = 1.7;
    const double y_oracle = (j_series_oracle(mu, t) * std::cos(mu * M_PI) -
                             j_series_oracle(-mu, t)) /
                            std::sin(mu * M_PI);
    CHECK(lhi::bessel(BesselKind::Y, mu, t) == doctest::Approx(y_oracle).epsilon(1e-9));
}

TEST_CASE("bessel reflection consistency for K") {
    using lhi::BesselKind;
    for (double mu : {0.2, 0.45, 1.3, 2.6}) {
        for (double t : {0.5, 2.0, 10.0}) {
            const double k_ref = 0.5 * M_PI *
                                 (lhi::bessel(BesselKind::I, -mu, t) -
                                  lhi::bessel(BesselKind::I, mu, t)) /
                                 std::sin(mu * M_PI);
            CHECK(lhi::bessel(BesselKind::K, mu, t) ==
                  doctest::Approx(k_ref).epsilon(1e-9));
        }
    }
}

TEST_CASE("bessel wronskian") {
    using lhi::BesselKind;
    for (double t : {0.5, 1.0, 5.0, 20.0}) {
        for (double mu : {0.0, 0.3, 1.5}) {
            const double w = lhi::bessel(BesselKind::J, mu, t) *
                                 lhi::bessel(BesselKind::Y, mu + 1.0, t) -
                             lhi::bessel(BesselKind::J, mu + 1.0, t) *
                                 lhi::bessel(BesselKind::Y, mu, t);
            CHECK(w == doctest::Approx(-2.0 / (M_PI * t)).epsilon(1e-8));
        }
    }
}

TEST_CASE("Kh is exactly (2/pi) K") {
    using lhi::BesselKind;
    for (double mu : {0.0, 0.7, 2.25}) {
        for (double t : {0.3, 1.0, 8.0}) {
            CHECK(lhi::bessel(BesselKind::Kh, mu, t) ==
                  (2.0 / M_PI) * lhi::bessel(BesselKind::K, mu, t));
        }
    }
}

TEST_CASE("bessel domain errors") {
    using lhi::BesselKind;
    CHECK_THROWS_AS(lhi::bessel(BesselKind::J, 0.0, 0.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::bessel(BesselKind::K, 0.0, -1.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::bessel(BesselKind::J, 8.5, 1.0), lhi::UnsupportedOrder);
}
