#ifndef LHI_REPORT_HPP
#define LHI_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lhi {

struct ReportRow {
    std::string identity;
    double nu = 0.0;
    double mu = 0.0;
    std::string point_kind;
    double point = 0.0;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::int64_t evaluations = 0;
};

// pass <=> rel_err <= tol; when |oracle| < 1e-10 the relative criterion is
// meaningless and an absolute floor of 1e-12 applies instead.
bool passes(double closed_form, double oracle, double tol);

ReportRow make_row(std::string identity, double nu, double mu,
                   std::string point_kind, double point, double closed_form,
                   double oracle, std::int64_t evaluations, double tol);

// Deterministic serialization: every real is printed with %.17g so that
// identical inputs give byte-identical reports.
std::string format_real(double x);
std::string to_json(const std::vector<ReportRow>& rows);
std::string to_csv(const std::vector<ReportRow>& rows);

} // namespace lhi

#endif
