#ifndef LHI_LEGENDRE_HPP
#define LHI_LEGENDRE_HPP

#include "lhi/errors.hpp"

#include <complex>
#include <utility>

namespace lhi {

// The three historical normalizations of the second Legendre function:
//   e^{-mu pi i} [Q]_H = Gamma(nu+mu+1) [Q]_O = (sin nu.pi / sin (nu+mu)pi) [Q]_B.
enum class QConvention { Hobson, Olver, Barnes };

const char* to_string(QConvention conv);

// Factor F with [Q]_conv = F * [Q]_Olver.  Throws ConventionDegenerate when
// F is 0/0 or infinite (gamma pole for Hobson/Barnes, integer nu for Barnes).
std::complex<double> q_convention_factor(QConvention conv, double nu, double mu);

// Off-cut associated Legendre function P_nu^mu(x), x > 1.
double legendre_p(double nu, double mu, double x);

// Olver's normalized second Legendre function on x > 1; real for real input
// and symmetric under mu -> -mu.
double olver_q(double nu, double mu, double x);

// Q_nu^mu(x) in the requested normalization, as a complex value
// (Hobson carries the phase e^{mu pi i}).
std::complex<double> q_in_convention(double nu, double mu, double x, QConvention conv);

// Ferrers functions on (-1, 1).
double ferrers_p(double nu, double mu, double x);
double ferrers_q(double nu, double mu, double x);

// Both sides of the Whipple relation
//   Q[Olver]_nu^mu(cosh xi) = sqrt(pi/2) (sinh xi)^{-1/2} P_{mu-1/2}^{-nu-1/2}(coth xi),
// evaluated independently; they agree within 1e-9 relative.
std::pair<double, double> whipple_pair(double nu, double mu, double xi);

} // namespace lhi

#endif
