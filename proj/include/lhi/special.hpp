#ifndef LHI_SPECIAL_HPP
#define LHI_SPECIAL_HPP

#include "lhi/errors.hpp"

namespace lhi {

// The four Bessel kinds plus the Heaviside-normalized Kh = (2/pi) K.
enum class BesselKind { J, Y, I, K, Kh };

const char* to_string(BesselKind kind);

// Largest |mu|, |nu| the library accepts; keeps every series and
// asymptotic expansion well conditioned at desk scale.
inline constexpr double kParameterBox = 8.0;

// Euler gamma function.  Throws PoleError at non-positive integers.
double gamma(double x);

// log|Gamma(x)|, same pole condition.
double log_gamma_abs(double x);

// Gauss hypergeometric series 2F1(a, b; c; z) for real parameters and
// |z| < 1.  Values for z in (0.5, 1) are obtained by the standard
// z -> 1-z connection formula, except inside a guard band around its
// removable singularities where the plain series is summed instead.
double gauss_2f1(double a, double b, double c, double z);

// Olver's regularized hypergeometric function 2F1(a, b; c; z) / Gamma(c),
// defined for all real c (entire in c); accepts any z < 1.
double gauss_2f1_reg(double a, double b, double c, double z);

// Bessel function of the given kind, real order mu (|mu| <= 8), t > 0.
double bessel(BesselKind kind, double mu, double t);

} // namespace lhi

#endif
