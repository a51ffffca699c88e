#include "lhi/special.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace lhi {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr int kMaxSeriesTerms = 200000;
// Width of the band around removable singularities of the z -> 1-z
// connection formula inside which the plain series is summed instead.
constexpr double kConnectionGuard = 1e-3;

bool is_nonpositive_integer(double x, double tol = 1e-13) {
    return x <= tol && std::abs(x - std::round(x)) <= tol;
}

// 1/Gamma(x); zero at the poles.
double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / boost::math::tgamma(x);
}

// Terminating hypergeometric sum when a (or b) is a non-positive integer.
double poly_2f1(double a, double b, double c, double z) {
    if (!is_nonpositive_integer(a)) std::swap(a, b);
    int n = static_cast<int>(std::lround(-a));
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    return sum;
}

// Plain Gauss series; caller guarantees no (c)_k zero is hit before
// the series terminates or converges.
double series_2f1(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= kSeriesTol * std::abs(sum) && k > 2) return sum;
    }
    throw NonConvergence("2F1 series did not converge");
}

double hyp2f1_core(double a, double b, double c, double z);

// z -> 1-z connection (DLMF 15.8.4); requires c-a-b away from the integers.
double connection_1mz(double a, double b, double c, double z) {
    const double d = c - a - b;
    const double w = 1.0 - z;
    const double gc = boost::math::tgamma(c);
    const double c1 = gc * boost::math::tgamma(d) * recip_gamma(c - a) * recip_gamma(c - b);
    const double c2 = gc * boost::math::tgamma(-d) * recip_gamma(a) * recip_gamma(b);
    double sum = 0.0;
    if (c1 != 0.0) sum += c1 * hyp2f1_core(a, b, 1.0 - d, w);
    if (c2 != 0.0) sum += c2 * std::pow(w, d) * hyp2f1_core(c - a, c - b, 1.0 + d, w);
    return sum;
}

double hyp2f1_core(double a, double b, double c, double z) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return poly_2f1(a, b, c, z);
    if (z < -0.5) {
        // Pfaff transformation maps z in (-inf, -0.5) to z/(z-1) in (1/3, 1).
        return std::pow(1.0 - z, -a) * hyp2f1_core(a, c - b, c, z / (z - 1.0));
    }
    if (z > 0.5) {
        const double d = c - a - b;
        if (std::abs(d - std::round(d)) > kConnectionGuard)
            return connection_1mz(a, b, c, z);
        // Near-degenerate connection coefficients: fall back to the plain
        // series, which still converges (slowly) for z < 1.
        if (z > 0.9995)
            throw NonConvergence("2F1: z too close to 1 with degenerate connection");
    }
    return series_2f1(a, b, c, z);
}

} // namespace

const char* to_string(BesselKind kind) {
    switch (kind) {
        case BesselKind::J: return "J";
        case BesselKind::Y: return "Y";
        case BesselKind::I: return "I";
        case BesselKind::K: return "K";
        case BesselKind::Kh: return "Kh";
    }
    return "?";
}

double gamma(double x) {
    if (is_nonpositive_integer(x, 0.0))
        throw PoleError("gamma: pole at non-positive integer x = " + std::to_string(x));
    return boost::math::tgamma(x);
}

double log_gamma_abs(double x) {
    if (is_nonpositive_integer(x, 0.0))
        throw PoleError("log_gamma_abs: pole at x = " + std::to_string(x));
    return boost::math::lgamma(x);
}

double gauss_2f1(double a, double b, double c, double z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("gauss_2f1: |z| >= 1");
    if (is_nonpositive_integer(c)) {
        // Allowed only if the series terminates before the (c)_k zero.
        const int m = static_cast<int>(std::lround(-c));
        const bool a_ok = is_nonpositive_integer(a) && std::lround(-a) <= m;
        const bool b_ok = is_nonpositive_integer(b) && std::lround(-b) <= m;
        if (!a_ok && !b_ok)
            throw ParameterError("gauss_2f1: c is a non-positive integer");
        return poly_2f1(a_ok ? a : b, a_ok ? b : a, c, z);
    }
    return hyp2f1_core(a, b, c, z);
}

double gauss_2f1_reg(double a, double b, double c, double z) {
    if (z >= 1.0)
        throw DomainError("gauss_2f1_reg: z >= 1");
    if (is_nonpositive_integer(c)) {
        // 2F1(a,b;-m;z)/Gamma(-m): first m+1 terms vanish; shift the series.
        const int m = static_cast<int>(std::lround(-c));
        double coeff = 1.0;
        for (int k = 0; k <= m; ++k)
            coeff *= (a + k) * (b + k);
        if (coeff == 0.0) return 0.0;
        coeff /= boost::math::tgamma(m + 2.0); // (m+1)!
        return coeff * std::pow(z, m + 1) *
               hyp2f1_core(a + m + 1.0, b + m + 1.0, m + 2.0, z);
    }
    return hyp2f1_core(a, b, c, z) / boost::math::tgamma(c);
}

double bessel(BesselKind kind, double mu, double t) {
    if (!(t > 0.0))
        throw DomainError("bessel: t must be positive");
    if (std::abs(mu) > kParameterBox)
        throw UnsupportedOrder("bessel: |mu| > 8 unsupported");
    double v;
    try {
        switch (kind) {
            case BesselKind::J: v = boost::math::cyl_bessel_j(mu, t); break;
            case BesselKind::Y: v = boost::math::cyl_neumann(mu, t); break;
            case BesselKind::I: v = boost::math::cyl_bessel_i(mu, t); break;
            case BesselKind::K: v = boost::math::cyl_bessel_k(mu, t); break;
            case BesselKind::Kh: v = (2.0 / M_PI) * boost::math::cyl_bessel_k(mu, t); break;
            default: throw DomainError("bessel: bad kind");
        }
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "bessel(" << to_string(kind) << ", " << mu << ", " << t << "): " << e.what();
        throw DomainError(os.str());
    }
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "bessel(" << to_string(kind) << ", " << mu << ", " << t << "): non-finite result";
        throw DomainError(os.str());
    }
    return v;
}

} // namespace lhi
