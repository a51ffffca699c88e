#ifndef LHI_ERRATA_HPP
#define LHI_ERRATA_HPP

#include "lhi/transforms.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace lhi {

enum class ErratumSource { Watson44, Erdelyi54, Roberts66, Agrest71, GR2015 };

const char* to_string(ErratumSource s);

enum class AuditMode { FullAudit, RatioOnly };
enum class Verdict { Confirmed, Inconclusive };

// A published table error, encoded as a factor substitution: the wrong
// (printed) factor and the corrected one, both as functions of (nu, mu).
// Wrong forms are reconstructed as (corrected closed form) * (wrong/corrected).
struct ErratumCase {
    ErratumSource source;
    std::string entry_id;
    IdentityId identity;
    std::function<std::complex<double>(double, double)> wrong_factor;
    std::function<std::complex<double>(double, double)> corrected_factor;
    AuditMode mode;
    std::string note;
};

struct AuditRecord {
    ErratumCase item;
    double nu, mu, angle;
    double oracle;
    std::complex<double> wrong_value;
    std::complex<double> corrected_value;
    double wrong_rel_err;
    double corrected_rel_err;
    Verdict verdict;
};

// The shipped catalogue of errata cases.
std::vector<ErratumCase> builtin_cases();

// Audit one case at the given parameters (angle is theta, xi or s,
// matching the case's identity).  Throws DegenerateParameters when the
// declared factors are 0/0 or infinite there.
AuditRecord audit(const ErratumCase& c, double nu, double mu, double angle);

// Audit at generic default parameters suitable for the case.
AuditRecord audit_at_defaults(const ErratumCase& c);

} // namespace lhi

#endif
