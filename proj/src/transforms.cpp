#include "lhi/transforms.hpp"
#include "lhi/legendre.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace lhi {

namespace {

BesselKind kind_of(IdentityId id) {
    switch (id) {
        case IdentityId::T1_J:
        case IdentityId::S_JJ: return BesselKind::J;
        case IdentityId::T1_Y: return BesselKind::Y;
        case IdentityId::T1_I:
        case IdentityId::T2_Ip:
        case IdentityId::S_II: return BesselKind::I;
        default: return BesselKind::K;
    }
}

void check_convergence(BesselKind kind, double nu, double mu) {
    if (!convergence_ok(kind, nu, mu)) {
        std::ostringstream os;
        os << "convergence condition violated for " << to_string(kind)
           << " at nu=" << nu << ", mu=" << mu;
        throw ConvergenceError(os.str());
    }
}

// Project a complex-phased right-hand side to the real axis; a large
// imaginary residue means the normalization bookkeeping is wrong.
double project_real(std::complex<double> z) {
    if (std::abs(z.imag()) > 1e-10 * std::max(std::abs(z.real()), 1e-280))
        throw Error("rhs_trig: imaginary residue above tolerance; phase mismatch");
    return z.real();
}

} // namespace

const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::T1_J: return "T1_J";
        case IdentityId::T1_Y: return "T1_Y";
        case IdentityId::T1_I: return "T1_I";
        case IdentityId::T1_K: return "T1_K";
        case IdentityId::T1_K2: return "T1_K2";
        case IdentityId::T2_Ip: return "T2_Ip";
        case IdentityId::T2_Kp: return "T2_Kp";
        case IdentityId::S_JJ: return "S_JJ";
        case IdentityId::S_II: return "S_II";
        case IdentityId::S_KK_inside: return "S_KK_inside";
        case IdentityId::S_KK_outside: return "S_KK_outside";
        case IdentityId::S_K_at_1: return "S_K_at_1";
    }
    return "?";
}

const char* to_string(PointKind pk) {
    switch (pk) {
        case PointKind::Theta: return "theta";
        case PointKind::Xi: return "xi";
        case PointKind::LaplaceS: return "s";
    }
    return "?";
}

bool convergence_ok(BesselKind kind, double nu, double mu) {
    switch (kind) {
        case BesselKind::J:
        case BesselKind::I: return nu + mu > -1.0;
        default: return nu + mu > -1.0 && nu - mu > -1.0;
    }
}

bool exists_at(BesselKind kind, double s) {
    switch (kind) {
        case BesselKind::J:
        case BesselKind::Y: return s > 0.0;
        case BesselKind::I: return s > 1.0;
        default: return s > -1.0;
    }
}

bool TransformQuery::converges() const { return convergence_ok(kind, nu, mu); }

bool TransformQuery::exists() const {
    if (point_kind != PointKind::LaplaceS) return true;
    return exists_at(kind, point);
}

double rhs_trig(IdentityId id, double nu, double mu, double angle) {
    using namespace std::complex_literals;
    check_convergence(kind_of(id), nu, mu);
    const bool is_theta = (id == IdentityId::T1_J || id == IdentityId::T1_Y);
    if (is_theta) {
        if (!(angle > 0.0 && angle < 0.5 * M_PI))
            throw DomainError("rhs_trig: theta must lie in (0, pi/2)");
    } else if (id != IdentityId::T1_K2 && !(angle > 0.0)) {
        throw DomainError("rhs_trig: xi must be positive");
    }
    if (!std::isfinite(angle))
        throw DomainError("rhs_trig: angle must be finite");

    switch (id) {
        case IdentityId::T1_J:
            return gamma(nu + mu + 1.0) * ferrers_p(nu, -mu, std::cos(angle));
        case IdentityId::T1_Y:
            return -(2.0 / M_PI) * gamma(nu + mu + 1.0) *
                   ferrers_q(nu, -mu, std::cos(angle));
        case IdentityId::T1_I:
            return gamma(nu + mu + 1.0) * legendre_p(nu, -mu, std::cosh(angle));
        case IdentityId::T1_K:
            return project_real(
                gamma(nu + mu + 1.0) * std::exp(1i * (mu * M_PI)) *
                q_in_convention(nu, -mu, std::cosh(angle), QConvention::Hobson));
        case IdentityId::T1_K2:
            return std::sqrt(0.5 * M_PI) * gamma(nu + mu + 1.0) * gamma(nu - mu + 1.0) /
                   std::sqrt(std::cosh(angle)) *
                   ferrers_p(mu - 0.5, -nu - 0.5, std::tanh(angle));
        case IdentityId::T2_Ip:
            return project_real(
                std::sqrt(2.0 / M_PI) / std::sqrt(std::sinh(angle)) *
                std::exp(-1i * ((nu + 0.5) * M_PI)) *
                q_in_convention(mu - 0.5, nu + 0.5, 1.0 / std::tanh(angle),
                                QConvention::Hobson));
        case IdentityId::T2_Kp:
            return std::sqrt(0.5 * M_PI) * gamma(nu + mu + 1.0) * gamma(nu - mu + 1.0) /
                   std::sqrt(std::sinh(angle)) *
                   legendre_p(mu - 0.5, -nu - 0.5, 1.0 / std::tanh(angle));
        default:
            throw DomainError("rhs_trig: id is not a trigonometric identity");
    }
}

double lt_closed(BesselKind kind, double nu, double mu, double s) {
    check_convergence(kind, nu, mu);
    if (!exists_at(kind, s)) {
        std::ostringstream os;
        os << "L{t^nu " << to_string(kind) << "_mu}(s) does not exist at s = " << s;
        throw ExistenceError(os.str());
    }
    switch (kind) {
        case BesselKind::J:
            return gamma(nu + mu + 1.0) * std::pow(1.0 + s * s, -0.5 * (nu + 1.0)) *
                   ferrers_p(nu, -mu, s / std::sqrt(1.0 + s * s));
        case BesselKind::I:
            return gamma(nu + mu + 1.0) * std::pow(s * s - 1.0, -0.5 * (nu + 1.0)) *
                   legendre_p(nu, -mu, s / std::sqrt(s * s - 1.0));
        case BesselKind::Kh:
            return (2.0 / M_PI) * lt_closed(BesselKind::K, nu, mu, s);
        case BesselKind::K: {
            if (s == 1.0) return lt_k_at_one(nu, mu);
            const double gg = gamma(nu + mu + 1.0) * gamma(nu - mu + 1.0);
            if (s < 1.0)
                return std::sqrt(0.5 * M_PI) * gg *
                       std::pow(1.0 - s * s, -0.25 * (2.0 * nu + 1.0)) *
                       ferrers_p(mu - 0.5, -nu - 0.5, s);
            return std::sqrt(0.5 * M_PI) * gg *
                   std::pow(s * s - 1.0, -0.25 * (2.0 * nu + 1.0)) *
                   legendre_p(mu - 0.5, -nu - 0.5, s);
        }
        default:
            throw DomainError("lt_closed: no closed form for kind Y; use the trig identity");
    }
}

double lt_k_at_one(double nu, double mu) {
    check_convergence(BesselKind::K, nu, mu);
    return std::sqrt(M_PI) * gamma(nu + mu + 1.0) * gamma(nu - mu + 1.0) /
           (std::pow(2.0, nu + 1.0) * gamma(nu + 1.5));
}

double trig_of_s(BesselKind kind, double s) {
    switch (kind) {
        case BesselKind::J:
            if (!(s > 0.0)) throw DomainError("trig_of_s: need s > 0 for J");
            return std::atan2(1.0, s); // arccot(s) in (0, pi/2)
        case BesselKind::I:
            if (!(s > 1.0)) throw DomainError("trig_of_s: need s > 1 for I");
            return std::atanh(1.0 / s); // coth(xi) = s
        default:
            throw DomainError("trig_of_s: only J and I have trig substitutions");
    }
}

} // namespace lhi
