#include "lhi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lhi {

bool passes(double closed_form, double oracle, double tol) {
    const double abs_err = std::abs(closed_form - oracle);
    if (std::abs(oracle) < 1e-10) return abs_err <= 1e-12;
    return abs_err / std::abs(oracle) <= tol;
}

ReportRow make_row(std::string identity, double nu, double mu,
                   std::string point_kind, double point, double closed_form,
                   double oracle, std::int64_t evaluations, double tol) {
    ReportRow row;
    row.identity = std::move(identity);
    row.nu = nu;
    row.mu = mu;
    row.point_kind = std::move(point_kind);
    row.point = point;
    row.closed_form = closed_form;
    row.oracle = oracle;
    row.abs_err = std::abs(closed_form - oracle);
    row.rel_err = row.abs_err / std::max(std::abs(oracle), 1e-300);
    row.pass = passes(closed_form, oracle, tol);
    row.evaluations = evaluations;
    return row;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_json(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        os << "  {\"identity\":\"" << r.identity << "\","
           << "\"nu\":" << format_real(r.nu) << ","
           << "\"mu\":" << format_real(r.mu) << ","
           << "\"point_kind\":\"" << r.point_kind << "\","
           << "\"point\":" << format_real(r.point) << ","
           << "\"closed_form\":" << format_real(r.closed_form) << ","
           << "\"oracle\":" << format_real(r.oracle) << ","
           << "\"abs_err\":" << format_real(r.abs_err) << ","
           << "\"rel_err\":" << format_real(r.rel_err) << ","
           << "\"pass\":" << (r.pass ? "true" : "false") << ","
           << "\"evaluations\":" << r.evaluations << "}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "identity,nu,mu,point_kind,point,closed_form,oracle,abs_err,rel_err,"
          "pass,evaluations\n";
    for (const ReportRow& r : rows) {
        os << r.identity << ',' << format_real(r.nu) << ',' << format_real(r.mu)
           << ',' << r.point_kind << ',' << format_real(r.point) << ','
           << format_real(r.closed_form) << ',' << format_real(r.oracle) << ','
           << format_real(r.abs_err) << ',' << format_real(r.rel_err) << ','
           << (r.pass ? "true" : "false") << ',' << r.evaluations << '\n';
    }
    return os.str();
}

} // namespace lhi
