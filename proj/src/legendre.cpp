#include "lhi/legendre.hpp"
#include "lhi/special.hpp"

#include <cmath>
#include <sstream>

namespace lhi {

namespace {

constexpr double kEndpointGuard = 1e-6;
// Half-integer shifts (Whipple-transformed forms, K-transform branches)
// push degree/order at most 1/2 outside the user-facing box.
constexpr double kBoxSlack = 0.5;

bool near_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) <= tol;
}

void check_box(double nu, double mu) {
    if (std::abs(nu) > kParameterBox + kBoxSlack || std::abs(mu) > kParameterBox + kBoxSlack) {
        std::ostringstream os;
        os << "legendre: (nu, mu) = (" << nu << ", " << mu << ") outside supported box";
        throw ParameterError(os.str());
    }
}

// Hypergeometric representation shared by the off-cut and Ferrers P:
// ((w+x)/(w-x+...)) -- only the power factor differs.
double p_from_hyp(double nu, double mu, double x, double power_base) {
    const double f = gauss_2f1_reg(nu + 1.0, -nu, 1.0 - mu, 0.5 * (1.0 - x));
    return std::pow(power_base, 0.5 * mu) * f;
}

double ferrers_q_noninteger(double nu, double mu, double x) {
    const double s = std::sin(mu * M_PI);
    double ratio; // Gamma(nu+mu+1) / Gamma(nu-mu+1)
    if (near_integer(nu + mu + 1.0) && nu + mu + 1.0 < 0.5)
        throw ParameterError("ferrers_q: gamma pole at nu+mu+1");
    if (near_integer(nu - mu + 1.0) && nu - mu + 1.0 < 0.5) {
        ratio = 0.0;
    } else {
        ratio = std::exp(log_gamma_abs(nu + mu + 1.0) - log_gamma_abs(nu - mu + 1.0));
        // lgamma drops the sign; restore it for negative arguments.
        auto gamma_sign = [](double a) {
            if (a > 0.0) return 1.0;
            const int k = static_cast<int>(std::floor(a));
            return (k % 2 == 0) ? 1.0 : -1.0;
        };
        ratio *= gamma_sign(nu + mu + 1.0) * gamma_sign(nu - mu + 1.0);
    }
    const double pm = ferrers_p(nu, mu, x);
    const double pn = ratio == 0.0 ? 0.0 : ferrers_p(nu, -mu, x);
    return M_PI / (2.0 * s) * (std::cos(mu * M_PI) * pm - ratio * pn);
}

} // namespace

const char* to_string(QConvention conv) {
    switch (conv) {
        case QConvention::Hobson: return "Hobson";
        case QConvention::Olver: return "Olver";
        case QConvention::Barnes: return "Barnes";
    }
    return "?";
}

std::complex<double> q_convention_factor(QConvention conv, double nu, double mu) {
    using namespace std::complex_literals;
    if (conv == QConvention::Olver) return 1.0;
    if (near_integer(nu + mu + 1.0) && nu + mu + 1.0 < 0.5)
        throw ConventionDegenerate("q_convention_factor: gamma pole at nu+mu+1");
    const double g = gamma(nu + mu + 1.0);
    if (conv == QConvention::Hobson)
        return g * std::exp(1i * (mu * M_PI));
    // Barnes: (sin((nu+mu)pi) / sin(nu pi)) Gamma(nu+mu+1)
    const double sn = std::sin(nu * M_PI);
    const double snm = std::sin((nu + mu) * M_PI);
    if (std::abs(sn) < 1e-12 || std::abs(snm) < 1e-12)
        throw ConventionDegenerate("q_convention_factor: degenerate sine factor for Barnes");
    return (snm / sn) * g;
}

double legendre_p(double nu, double mu, double x) {
    check_box(nu, mu);
    if (!(x > 1.0))
        throw DomainError("legendre_p: x must exceed 1");
    if (x - 1.0 < kEndpointGuard)
        throw DomainError("legendre_p: x too close to 1 for reliable evaluation");
    const double v = p_from_hyp(nu, mu, x, (x + 1.0) / (x - 1.0));
    if (!std::isfinite(v))
        throw ParameterError("legendre_p: non-finite result (gamma pole?)");
    return v;
}

double olver_q(double nu, double mu, double x) {
    check_box(nu, mu);
    if (!(x > 1.0))
        throw DomainError("olver_q: x must exceed 1");
    if (x - 1.0 < kEndpointGuard)
        throw DomainError("olver_q: x too close to 1 for reliable evaluation");
    if (near_integer(nu + mu + 1.0) && nu + mu + 1.0 < 0.5)
        throw ParameterError("olver_q: nu+mu+1 is a non-positive integer");
    // DLMF-style representation in 1/x^2, regularized at c = nu + 3/2.
    const double u = 1.0 / (x * x);
    const double f = gauss_2f1_reg(0.5 * (nu + mu) + 1.0, 0.5 * (nu + mu + 1.0),
                                   nu + 1.5, u);
    const double v = std::sqrt(M_PI) * std::pow(x * x - 1.0, 0.5 * mu) *
                     std::pow(x, -(nu + mu + 1.0)) * std::pow(2.0, -(nu + 1.0)) * f;
    if (!std::isfinite(v))
        throw ParameterError("olver_q: non-finite result");
    return v;
}

std::complex<double> q_in_convention(double nu, double mu, double x, QConvention conv) {
    return q_convention_factor(conv, nu, mu) * olver_q(nu, mu, x);
}

double ferrers_p(double nu, double mu, double x) {
    check_box(nu, mu);
    if (!(x > -1.0 && x < 1.0))
        throw DomainError("ferrers_p: x must lie in (-1, 1)");
    if (1.0 - std::abs(x) < kEndpointGuard)
        throw DomainError("ferrers_p: x too close to +-1 for reliable evaluation");
    const double v = p_from_hyp(nu, mu, x, (1.0 + x) / (1.0 - x));
    if (!std::isfinite(v))
        throw ParameterError("ferrers_p: non-finite result (gamma pole?)");
    return v;
}

double ferrers_q(double nu, double mu, double x) {
    check_box(nu, mu);
    if (!(x > -1.0 && x < 1.0))
        throw DomainError("ferrers_q: x must lie in (-1, 1)");
    if (1.0 - std::abs(x) < kEndpointGuard)
        throw DomainError("ferrers_q: x too close to +-1 for reliable evaluation");
    if (!near_integer(mu, 1e-9))
        return ferrers_q_noninteger(nu, mu, x);
    // Integer order: the connection formula is 0/0.  Evaluate at mu +- eps
    // and mu +- 2 eps; averaging kills the O(eps) term and Richardson
    // extrapolation the O(eps^2) one.
    const double m = std::round(mu);
    const double eps = 1e-3;
    auto avg = [&](double e) {
        return 0.5 * (ferrers_q_noninteger(nu, m + e, x) +
                      ferrers_q_noninteger(nu, m - e, x));
    };
    const double a1 = avg(eps), a2 = avg(2.0 * eps);
    return (4.0 * a1 - a2) / 3.0;
}

std::pair<double, double> whipple_pair(double nu, double mu, double xi) {
    if (!(xi > 0.0))
        throw DomainError("whipple_pair: xi must be positive");
    check_box(nu, mu);
    const double lhs = olver_q(nu, mu, std::cosh(xi));
    const double rhs = std::sqrt(0.5 * M_PI) / std::sqrt(std::sinh(xi)) *
                       legendre_p(mu - 0.5, -nu - 0.5, 1.0 / std::tanh(xi));
    return {lhs, rhs};
}

} // namespace lhi
