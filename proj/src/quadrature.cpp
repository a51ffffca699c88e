#include "lhi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <vector>

namespace lhi {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

using Integrand = std::function<double(double)>;

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const Integrand& f, double a, double b, std::int64_t& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fv;
        if (i == 7) {
            fv = f(c);
            ++evals;
        } else {
            fv = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
            evals += 2;
        }
        resk += kWgk[i] * fv;
        if (i % 2 == 1) resg += kWg[i / 2] * fv;
    }
    return {a, b, resk * h, std::abs((resk - resg) * h)};
}

// Globally adaptive bisection over the given initial segments.
// Target: total error <= max(abs_floor, rel_tol * |value|).
struct AdaptResult { double value, err; };

AdaptResult adapt(const Integrand& f, const std::vector<std::pair<double, double>>& segs,
                  double abs_floor, double rel_tol,
                  std::int64_t budget, std::int64_t& evals) {
    std::priority_queue<Panel> heap;
    double value = 0.0, err = 0.0;
    auto push = [&](Panel p) {
        value += p.value;
        err += p.err;
        if (p.b - p.a > 1e-300) heap.push(p);
    };
    for (auto [a, b] : segs) {
        if (evals + 15 > budget) throw AccuracyError("quadrature: evaluation budget exhausted");
        push(gk15(f, a, b, evals));
    }
    while (err > std::max(abs_floor, rel_tol * std::abs(value))) {
        if (heap.empty())
            throw AccuracyError("quadrature: cannot refine further, target not met");
        Panel worst = heap.top();
        if (worst.err <= 1e-17 * std::abs(value)) break; // roundoff floor
        heap.pop();
        if (evals + 30 > budget)
            throw AccuracyError("quadrature: evaluation budget exhausted");
        value -= worst.value;
        err -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        push(gk15(f, worst.a, m, evals));
        push(gk15(f, m, worst.b, evals));
    }
    return {value, err};
}

// Behavior exponent of t^nu C_mu(t) as t -> 0.
double origin_exponent(BesselKind kind, double nu, double mu) {
    switch (kind) {
        case BesselKind::J:
        case BesselKind::I: return nu + mu;
        default: return nu - std::abs(mu);
    }
}

bool oscillatory(BesselKind kind) {
    return kind == BesselKind::J || kind == BesselKind::Y;
}

// Decay rate offset of the integrand envelope: C_mu(t) ~ t^{-1/2} e^{sigma t}.
double sigma_of(BesselKind kind) {
    switch (kind) {
        case BesselKind::I: return 1.0;
        case BesselKind::K:
        case BesselKind::Kh: return -1.0;
        default: return 0.0;
    }
}

// Analytic envelope bound on the tail integral from T, valid once
// lambda * T >= 2 * max(q, 1) with q = nu - 1/2.
double tail_bound(double nu, double lambda, double T) {
    const double q = nu - 0.5;
    const double head = 2.0 * std::pow(T, q) * std::exp(-lambda * T) / lambda;
    return (q <= 0.0 ? 1.0 : 2.0) * head;
}

QuadratureResult integrate_finite(BesselKind kind, double nu, double mu,
                                  double T, double s, double abs_floor,
                                  double rel_tol, std::int64_t budget) {
    Integrand f = [=](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(-s * t) * std::pow(t, nu) * bessel(kind, mu, t);
    };
    std::vector<std::pair<double, double>> segs;
    Integrand graded; // keeps the lambda alive while integrating
    const double p0 = origin_exponent(kind, nu, mu);
    double t0 = T;
    std::int64_t evals = 0;
    double value = 0.0, err = 0.0;
    if (p0 < 0.5) {
        // Graded first piece: t = u^2 softens the algebraic endpoint
        // singularity (exponents in (-1, 0) at t = 0).
        t0 = std::min(1.0, T);
        graded = [f](double u) { return 2.0 * u * f(u * u); };
        auto r = adapt(graded, {{0.0, std::sqrt(t0)}}, 0.5 * abs_floor,
                       0.5 * rel_tol, budget, evals);
        value += r.value;
        err += r.err;
    } else {
        t0 = 0.0;
    }
    if (T > t0) {
        // Cap panels at half a Bessel period for the oscillatory kinds.
        const double cap = oscillatory(kind) ? M_PI : (T - t0);
        const int n = std::max(1, static_cast<int>(std::ceil((T - t0) / cap)));
        const double h = (T - t0) / n;
        for (int i = 0; i < n; ++i)
            segs.emplace_back(t0 + i * h, t0 + (i + 1) * h);
        auto r = adapt(f, segs, 0.5 * abs_floor, 0.5 * rel_tol, budget, evals);
        value += r.value;
        err += r.err;
    }
    QuadratureResult out;
    out.value = value;
    out.error_estimate = err;
    out.evaluations = evals;
    out.truncation_T = T;
    return out;
}

} // namespace

QuadratureResult ilhi(BesselKind kind, double nu, double mu, double T, double s,
                      std::int64_t budget) {
    if (!(T > 0.0)) throw DomainError("ilhi: T must be positive");
    if (!convergence_ok(kind, nu, mu)) {
        std::ostringstream os;
        os << "ilhi: integrand of kind " << to_string(kind)
           << " not integrable at t=0 for nu=" << nu << ", mu=" << mu;
        throw ConvergenceError(os.str());
    }
    return integrate_finite(kind, nu, mu, T, s, 1e-12, 1e-10, budget);
}

QuadratureResult lt_oracle(BesselKind kind, double nu, double mu, double s,
                           double tol, std::int64_t budget) {
    if (!(tol >= 1e-12)) throw DomainError("lt_oracle: tol must be >= 1e-12");
    if (!convergence_ok(kind, nu, mu))
        throw ConvergenceError("lt_oracle: t=0 convergence condition violated");
    if (!exists_at(kind, s)) {
        std::ostringstream os;
        os << "lt_oracle: transform of kind " << to_string(kind)
           << " does not exist at s = " << s;
        throw ExistenceError(os.str());
    }
    const double lambda = s - sigma_of(kind);
    const double q = nu - 0.5;
    double T = std::max(15.0, 2.0 * mu * mu);
    while (lambda * T < 2.0 * std::max(q, 1.0) || tail_bound(nu, lambda, T) >= 0.1 * tol) {
        T *= 1.25;
        if (T > 1e7)
            throw AccuracyError("lt_oracle: tail bound target unreachable");
    }
    QuadratureResult r = integrate_finite(kind, nu, mu, T, s, 0.1 * tol, tol, budget);
    r.error_estimate += tail_bound(nu, lambda, T);
    r.truncation_T = T;
    return r;
}

QuadratureResult generic_lhs(IdentityId id, double nu, double mu, double angle,
                             double tol, std::int64_t budget) {
    BesselKind kind;
    double a, b; // integrand: exp(-a t) t^nu C_mu(b t)
    switch (id) {
        case IdentityId::T1_J:
        case IdentityId::T1_Y:
            if (!(angle > 0.0 && angle < 0.5 * M_PI))
                throw DomainError("generic_lhs: theta must lie in (0, pi/2)");
            kind = (id == IdentityId::T1_J) ? BesselKind::J : BesselKind::Y;
            a = std::cos(angle);
            b = std::sin(angle);
            break;
        case IdentityId::T1_I:
        case IdentityId::T2_Ip:
        case IdentityId::T1_K:
        case IdentityId::T2_Kp:
            if (!(angle > 0.0)) throw DomainError("generic_lhs: xi must be positive");
            kind = (id == IdentityId::T1_I || id == IdentityId::T2_Ip)
                       ? BesselKind::I : BesselKind::K;
            a = std::cosh(angle);
            b = std::sinh(angle);
            break;
        case IdentityId::T1_K2:
            if (!std::isfinite(angle)) throw DomainError("generic_lhs: xi must be finite");
            kind = BesselKind::K;
            a = std::sinh(angle);
            b = std::cosh(angle);
            break;
        case IdentityId::S_JJ: kind = BesselKind::J; a = angle; b = 1.0; break;
        case IdentityId::S_II: kind = BesselKind::I; a = angle; b = 1.0; break;
        case IdentityId::S_KK_inside:
        case IdentityId::S_KK_outside: kind = BesselKind::K; a = angle; b = 1.0; break;
        case IdentityId::S_K_at_1: kind = BesselKind::K; a = 1.0; b = 1.0; break;
        default: throw DomainError("generic_lhs: unknown identity");
    }
    // u = b t reduces the two-scale integrand to the Laplace form at s = a/b.
    QuadratureResult r = lt_oracle(kind, nu, mu, a / b, tol, budget);
    const double scale = std::pow(b, -(nu + 1.0));
    r.value *= scale;
    r.error_estimate *= scale;
    r.truncation_T /= b;
    return r;
}

} // namespace lhi
