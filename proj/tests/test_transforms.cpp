#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhi/quadrature.hpp"
#include "lhi/transforms.hpp"

#include <cmath>

using lhi::BesselKind;
using lhi::IdentityId;

TEST_CASE("rhs_trig basic values") {
    CHECK(lhi::rhs_trig(IdentityId::T1_J, 0, 0, 0.25 * M_PI) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lhi::rhs_trig(IdentityId::T1_I, 0, 0, 0.9) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // mixed-argument K integral against direct quadrature
    const auto q = lhi::generic_lhs(IdentityId::T1_K2, 0.6, 0.25, 0.4, 1e-10);
    CHECK(lhi::rhs_trig(IdentityId::T1_K2, 0.6, 0.25, 0.4) ==
          doctest::Approx(q.value).epsilon(1e-8));
}

TEST_CASE("rhs_trig errors") {
    CHECK_THROWS_AS(lhi::rhs_trig(IdentityId::T1_J, -0.8, -0.5, 0.7),
                    lhi::ConvergenceError);
    CHECK_THROWS_AS(lhi::rhs_trig(IdentityId::T1_J, 0, 0, 2.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::rhs_trig(IdentityId::T1_I, 0, 0, -0.1), lhi::DomainError);
    // identity five admits negative xi
    CHECK_NOTHROW(lhi::rhs_trig(IdentityId::T1_K2, 0.6, 0.25, -0.4));
}

TEST_CASE("lt_closed anchors") {
    CHECK(lhi::lt_closed(BesselKind::J, 0, 0, 1) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(lhi::lt_closed(BesselKind::I, 0, 0, 2) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(lhi::lt_closed(BesselKind::K, 0, 0, 0.5) ==
          doctest::Approx(std::acos(0.5) / std::sqrt(0.75)).epsilon(1e-12));
    CHECK(lhi::lt_closed(BesselKind::K, 0, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    for (double s : {0.3, 0.9, 2.0, 7.0}) {
        CHECK(lhi::lt_closed(BesselKind::J, 0, 0, s) ==
              doctest::Approx(1.0 / std::sqrt(1.0 + s * s)).epsilon(1e-10));
    }
    for (double s : {1.1, 2.0, 5.0}) {
        CHECK(lhi::lt_closed(BesselKind::I, 0, 0, s) ==
              doctest::Approx(1.0 / std::sqrt(s * s - 1.0)).epsilon(1e-10));
    }
    for (double s : {-0.5, 0.0, 0.8}) {
        CHECK(lhi::lt_closed(BesselKind::K, 0, 0, s) ==
              doctest::Approx(std::acos(s) / std::sqrt(1.0 - s * s)).epsilon(1e-10));
    }
}

TEST_CASE("lt_closed existence and kind errors") {
    CHECK_THROWS_AS(lhi::lt_closed(BesselKind::J, 0, 0, -0.5), lhi::ExistenceError);
    CHECK_THROWS_AS(lhi::lt_closed(BesselKind::I, 0, 0, 0.5), lhi::ExistenceError);
    CHECK_THROWS_AS(lhi::lt_closed(BesselKind::K, 0, 0, -1.5), lhi::ExistenceError);
    CHECK_THROWS_AS(lhi::lt_closed(BesselKind::Y, 0, 0, 1.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::lt_closed(BesselKind::K, -0.8, 0.5, 2.0), lhi::ConvergenceError);
}

TEST_CASE("lt_k_at_one values") {
    CHECK(lhi::lt_k_at_one(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lhi::lt_k_at_one(1, 0) ==
          doctest::Approx(lhi::lt_oracle(BesselKind::K, 1, 0, 1, 1e-10).value)
              .epsilon(1e-8));
    CHECK(lhi::lt_k_at_one(0.5, 0.25) ==
          doctest::Approx(lhi::lt_oracle(BesselKind::K, 0.5, 0.25, 1, 1e-10).value)
              .epsilon(1e-8));
    CHECK_THROWS_AS(lhi::lt_k_at_one(-0.8, 0.5), lhi::ConvergenceError);
}

TEST_CASE("trig_of_s and the scaling relation") {
    CHECK(lhi::trig_of_s(BesselKind::J, 1.0) == doctest::Approx(0.25 * M_PI).epsilon(1e-14));
    const double xi = 0.7;
    CHECK(lhi::trig_of_s(BesselKind::I, std::cosh(xi) / std::sinh(xi)) ==
          doctest::Approx(xi).epsilon(1e-12));
    CHECK(lhi::trig_of_s(BesselKind::J, 2.5) ==
          doctest::Approx(std::atan(1.0 / 2.5)).epsilon(1e-14));
    CHECK_THROWS_AS(lhi::trig_of_s(BesselKind::J, -1.0), lhi::DomainError);
    CHECK_THROWS_AS(lhi::trig_of_s(BesselKind::I, 0.8), lhi::DomainError);

    for (double nu : {-0.4, 0.0, 0.7, 1.5}) {
        for (double mu : {-0.3, 0.0, 0.5, 1.0}) {
            if (nu + mu <= -1.0) continue;
            for (double s : {0.4, 1.0, 3.0}) {
                const double theta = lhi::trig_of_s(BesselKind::J, s);
                CHECK(lhi::lt_closed(BesselKind::J, nu, mu, s) ==
                      doctest::Approx(std::pow(std::sin(theta), nu + 1.0) *
                                      lhi::rhs_trig(IdentityId::T1_J, nu, mu, theta))
                          .epsilon(1e-10));
            }
            for (double s : {1.3, 2.0, 4.0}) {
                const double xi2 = lhi::trig_of_s(BesselKind::I, s);
                CHECK(lhi::lt_closed(BesselKind::I, nu, mu, s) ==
                      doctest::Approx(std::pow(std::sinh(xi2), nu + 1.0) *
                                      lhi::rhs_trig(IdentityId::T1_I, nu, mu, xi2))
                          .epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("whipple equivalence of the hyperbolic forms") {
    for (double nu : {-0.4, 0.0, 0.7, 1.5, 3.2}) {
        for (double mu : {-0.3, 0.0, 0.5, 2.25}) {
            for (double xi : {0.2, 0.7, 1.5}) {
                if (nu + mu > -1.0) {
                    CHECK(lhi::rhs_trig(IdentityId::T1_I, nu, mu, xi) ==
                          doctest::Approx(lhi::rhs_trig(IdentityId::T2_Ip, nu, mu, xi))
                              .epsilon(1e-9));
                }
                if (nu + mu > -1.0 && nu - mu > -1.0) {
                    CHECK(lhi::rhs_trig(IdentityId::T1_K, nu, mu, xi) ==
                          doctest::Approx(lhi::rhs_trig(IdentityId::T2_Kp, nu, mu, xi))
                              .epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("K-branch continuity at s = 1") {
    for (auto [nu, mu] : {std::pair{0.0, 0.0}, {0.7, 0.45}, {1.5, 0.5}, {2.2, 1.0}}) {
        const double mid = lhi::lt_k_at_one(nu, mu);
        CHECK(std::abs(lhi::lt_closed(BesselKind::K, nu, mu, 1.0 - 1e-4) - mid) <=
              1e-3 * mid);
        CHECK(std::abs(lhi::lt_closed(BesselKind::K, nu, mu, 1.0 + 1e-4) - mid) <=
              1e-3 * mid);
    }
}

TEST_CASE("Kh rewrite is exact") {
    for (double s : {-0.5, 0.3, 1.0, 2.0}) {
        CHECK(lhi::lt_closed(BesselKind::Kh, 0.7, 0.45, s) ==
              (2.0 / M_PI) * lhi::lt_closed(BesselKind::K, 0.7, 0.45, s));
    }
}

TEST_CASE("TransformQuery flags") {
    using lhi::PointKind;
    lhi::TransformQuery q{BesselKind::K, 0.7, 0.45, PointKind::LaplaceS, 0.3};
    CHECK(q.converges());
    CHECK(q.exists());
    q.mu = 2.0; // nu - mu <= -1
    CHECK_FALSE(q.converges());
    q = {BesselKind::I, 0.0, 0.0, PointKind::LaplaceS, 0.5};
    CHECK_FALSE(q.exists());
    CHECK(lhi::convergence_ok(BesselKind::J, -0.6, 0.0));
    CHECK_FALSE(lhi::convergence_ok(BesselKind::Y, -0.6, 0.5));
    CHECK(lhi::exists_at(BesselKind::K, -0.9));
    CHECK_FALSE(lhi::exists_at(BesselKind::J, 0.0));
}
