#ifndef LHI_TRANSFORMS_HPP
#define LHI_TRANSFORMS_HPP

#include "lhi/special.hpp"

#include <string>

namespace lhi {

// The seven trigonometrically parametrized identities plus the
// non-trigonometric Laplace-transform forms and the s = 1 value for K.
enum class IdentityId {
    T1_J,          // L-transform of t^nu J_mu, angle theta in (0, pi/2)
    T1_Y,          // t^nu Y_mu, theta
    T1_I,          // t^nu I_mu, xi > 0
    T1_K,          // t^nu K_mu, xi > 0 (off-cut Q form)
    T1_K2,         // exp(-t sinh xi) t^nu K_mu(t cosh xi), xi real
    T2_Ip,         // same integral as T1_I, Q form at coth xi
    T2_Kp,         // same integral as T1_K, P form at coth xi
    S_JJ,          // L{t^nu J_mu}(s), s > 0
    S_II,          // L{t^nu I_mu}(s), s > 1
    S_KK_inside,   // L{t^nu K_mu}(s), s in (-1, 1), Ferrers branch
    S_KK_outside,  // L{t^nu K_mu}(s), s > 1, off-cut branch
    S_K_at_1,      // L{t^nu K_mu}(1)
};

const char* to_string(IdentityId id);

enum class PointKind { Theta, Xi, LaplaceS };

const char* to_string(PointKind pk);

// One grid point for evaluation / verification.
struct TransformQuery {
    BesselKind kind;
    double nu;
    double mu;
    PointKind point_kind;
    double point;

    // t -> 0 convergence of the integral: nu+mu > -1 for J, I;
    // nu+-mu > -1 for Y, K.
    bool converges() const;
    // t -> infinity existence of the Laplace transform at this point.
    bool exists() const;
};

bool convergence_ok(BesselKind kind, double nu, double mu);
bool exists_at(BesselKind kind, double s);

// Right-hand side of the identity at the given angle (theta or xi,
// per the identity's parametrization).  Complex-phased forms are evaluated
// in complex arithmetic and projected to real after checking the
// imaginary residue.
double rhs_trig(IdentityId id, double nu, double mu, double angle);

// Closed-form Laplace transform L{t^nu C_mu(t)}(s) for C = J, I, K (and Kh).
// For K, s in (-1,1) uses the Ferrers branch, s = 1 the separate value,
// s > 1 the off-cut branch.
double lt_closed(BesselKind kind, double nu, double mu, double s);

// L{t^nu K_mu(t)}(1) = sqrt(pi) G(nu+mu+1) G(nu-mu+1) / (2^{nu+1} G(nu+3/2)).
double lt_k_at_one(double nu, double mu);

// Angle at which the trig identity corresponds to Laplace point s:
// theta = arccot(s) for J; xi with coth(xi) = s for I.
double trig_of_s(BesselKind kind, double s);

} // namespace lhi

#endif
