#ifndef LHI_QUADRATURE_HPP
#define LHI_QUADRATURE_HPP

#include "lhi/special.hpp"
#include "lhi/transforms.hpp"

#include <cstdint>
#include <limits>

namespace lhi {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // absolute bound, panel estimates + tail bound
    std::int64_t evaluations = 0;
    double truncation_T = std::numeric_limits<double>::quiet_NaN();
};

// Integrand-evaluation budget per call; exceeding it raises AccuracyError.
inline constexpr std::int64_t kDefaultEvalBudget = 2'000'000;

// Incomplete Lipschitz-Hankel integral Ce_{nu,mu}(T; s) over [0, T].
QuadratureResult ilhi(BesselKind kind, double nu, double mu, double T, double s,
                      std::int64_t budget = kDefaultEvalBudget);

// Brute-force oracle for L{t^nu C_mu(t)}(s): finite integral to a
// tail-bound-certified truncation point T*, plus the certified tail bound.
QuadratureResult lt_oracle(BesselKind kind, double nu, double mu, double s,
                           double tol, std::int64_t budget = kDefaultEvalBudget);

// Oracle for the left-hand side of identity `id` at the given angle,
// reduced to lt_oracle by the scaling substitution u = (bessel scale) * t.
QuadratureResult generic_lhs(IdentityId id, double nu, double mu, double angle,
                             double tol, std::int64_t budget = kDefaultEvalBudget);

} // namespace lhi

#endif
