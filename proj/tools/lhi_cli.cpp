// lhi: evaluate closed-form Laplace transforms of Bessel functions,
// verify them against the quadrature oracle, audit the errata catalogue,
// and compute incomplete integrals.

#include "lhi/errata.hpp"
#include "lhi/legendre.hpp"
#include "lhi/quadrature.hpp"
#include "lhi/report.hpp"
#include "lhi/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace lhi;

std::int64_t eval_budget() {
    if (const char* env = std::getenv("LHI_EVAL_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return static_cast<std::int64_t>(v);
    }
    return kDefaultEvalBudget;
}

BesselKind parse_kind(const std::string& s) {
    if (s == "J") return BesselKind::J;
    if (s == "Y") return BesselKind::Y;
    if (s == "I") return BesselKind::I;
    if (s == "K") return BesselKind::K;
    if (s == "Kh") return BesselKind::Kh;
    throw CLI::ValidationError("--kind", "must be one of J, Y, I, K, Kh");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + out_path);
    f << text;
}

struct GridPoint {
    double nu, mu;
    PointKind point_kind;
    double point;
};

PointKind parse_point_kind(const std::string& s) {
    if (s == "theta") return PointKind::Theta;
    if (s == "xi") return PointKind::Xi;
    if (s == "s") return PointKind::LaplaceS;
    throw DomainError("grid point_kind must be theta, xi or s");
}

const char* point_kind_label(PointKind pk) {
    switch (pk) {
        case PointKind::Theta: return "theta";
        case PointKind::Xi: return "xi";
        default: return "s";
    }
}

std::vector<GridPoint> default_grid() {
    const double nus[] = {-0.4, 0.0, 0.7, 1.5, 3.2};
    const double mus[] = {-0.3, 0.0, 0.5, 1.0, 2.25};
    const double thetas[] = {0.3, 0.8, 1.2};
    const double xis[] = {0.2, 0.7, 1.5};
    // s-grid for the oscillatory kinds doubles as extra theta points via
    // theta = arccot(s); I and K get their own s rows below.
    const double s_jy[] = {0.5, 1.0, 2.0};
    const double s_i[] = {1.2, 2.0, 5.0};
    const double s_k[] = {-0.5, 0.3, 1.0, 2.0};
    std::vector<GridPoint> grid;
    for (double nu : nus)
        for (double mu : mus) {
            for (double th : thetas) grid.push_back({nu, mu, PointKind::Theta, th});
            for (double s : s_jy)
                grid.push_back({nu, mu, PointKind::Theta, trig_of_s(BesselKind::J, s)});
            for (double xi : xis) grid.push_back({nu, mu, PointKind::Xi, xi});
            for (double s : s_i) grid.push_back({nu, mu, PointKind::LaplaceS, s});
            for (double s : s_k) grid.push_back({nu, mu, PointKind::LaplaceS, s});
            for (double s : s_jy) grid.push_back({nu, mu, PointKind::LaplaceS, s});
        }
    return grid;
}

std::vector<GridPoint> load_grid(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open grid file: " + path);
    nlohmann::json j = nlohmann::json::parse(f);
    if (!j.is_array()) throw DomainError("grid file must hold a JSON array");
    std::vector<GridPoint> grid;
    for (const auto& e : j) {
        grid.push_back({e.at("nu").get<double>(), e.at("mu").get<double>(),
                        parse_point_kind(e.at("point_kind").get<std::string>()),
                        e.at("point").get<double>()});
    }
    return grid;
}

// Identities applicable at one grid point; non-convergent combinations are
// skipped and counted, not failed.
std::vector<IdentityId> identities_at(const GridPoint& g, int& skipped) {
    std::vector<IdentityId> ids;
    auto add = [&](IdentityId id, BesselKind kind) {
        if (convergence_ok(kind, g.nu, g.mu)) ids.push_back(id);
        else ++skipped;
    };
    switch (g.point_kind) {
        case PointKind::Theta:
            add(IdentityId::T1_J, BesselKind::J);
            add(IdentityId::T1_Y, BesselKind::Y);
            break;
        case PointKind::Xi:
            add(IdentityId::T1_I, BesselKind::I);
            add(IdentityId::T1_K, BesselKind::K);
            add(IdentityId::T1_K2, BesselKind::K);
            add(IdentityId::T2_Ip, BesselKind::I);
            add(IdentityId::T2_Kp, BesselKind::K);
            break;
        case PointKind::LaplaceS:
            if (g.point > 0.0) add(IdentityId::S_JJ, BesselKind::J);
            if (g.point > 1.0) add(IdentityId::S_II, BesselKind::I);
            if (g.point > -1.0 && g.point < 1.0)
                add(IdentityId::S_KK_inside, BesselKind::K);
            if (g.point == 1.0) add(IdentityId::S_K_at_1, BesselKind::K);
            if (g.point > 1.0) add(IdentityId::S_KK_outside, BesselKind::K);
            break;
    }
    return ids;
}

double closed_value(IdentityId id, double nu, double mu, double point) {
    switch (id) {
        case IdentityId::S_JJ: return lt_closed(BesselKind::J, nu, mu, point);
        case IdentityId::S_II: return lt_closed(BesselKind::I, nu, mu, point);
        case IdentityId::S_KK_inside:
        case IdentityId::S_KK_outside:
        case IdentityId::S_K_at_1: return lt_closed(BesselKind::K, nu, mu, point);
        default: return rhs_trig(id, nu, mu, point);
    }
}

int cmd_verify(double tol, const std::string& format, const std::string& out,
               const std::string& grid_file) {
    const std::vector<GridPoint> grid =
        grid_file.empty() ? default_grid() : load_grid(grid_file);
    const std::int64_t budget = eval_budget();
    std::vector<ReportRow> rows;
    int skipped = 0;
    for (const GridPoint& g : grid) {
        for (IdentityId id : identities_at(g, skipped)) {
            try {
                const double closed = closed_value(id, g.nu, g.mu, g.point);
                const QuadratureResult q =
                    generic_lhs(id, g.nu, g.mu, g.point, 1e-10, budget);
                rows.push_back(make_row(to_string(id), g.nu, g.mu,
                                        point_kind_label(g.point_kind), g.point,
                                        closed, q.value, q.evaluations, tol));
            } catch (const ConvergenceError&) {
                ++skipped;
            } catch (const ExistenceError&) {
                ++skipped;
            }
        }
    }
    emit(format == "csv" ? to_csv(rows) : to_json(rows), out);
    int failed = 0;
    for (const ReportRow& r : rows)
        if (!r.pass) ++failed;
    std::cerr << "verify: " << rows.size() << " rows, " << failed << " failed, "
              << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}

int cmd_errata(const std::string& format, const std::string& out,
               const std::string& entry) {
    std::vector<ErratumCase> cases = builtin_cases();
    if (!entry.empty()) {
        std::vector<ErratumCase> filtered;
        for (const auto& c : cases)
            if (c.entry_id == entry) filtered.push_back(c);
        if (filtered.empty()) throw DomainError("unknown errata entry: " + entry);
        cases = std::move(filtered);
    }
    std::vector<ReportRow> rows;
    int failed = 0;
    for (const auto& c : cases) {
        const AuditRecord r = audit_at_defaults(c);
        ReportRow row;
        row.identity = std::string(to_string(c.source)) + " " + c.entry_id;
        row.nu = r.nu;
        row.mu = r.mu;
        row.point_kind = "angle";
        row.point = r.angle;
        row.closed_form = r.corrected_value.real();
        row.oracle = r.oracle;
        row.abs_err = std::abs(r.corrected_value - std::complex<double>(r.oracle));
        row.rel_err = r.corrected_rel_err;
        row.pass = r.verdict == Verdict::Confirmed;
        row.evaluations = 0;
        if (!row.pass) ++failed;
        rows.push_back(std::move(row));
    }
    emit(format == "csv" ? to_csv(rows) : to_json(rows), out);
    return failed == 0 ? 0 : 1;
}

int cmd_eval(const std::string& kind_s, double nu, double mu,
             std::optional<double> s, std::optional<double> theta,
             std::optional<double> xi, bool with_oracle,
             const std::string& format, const std::string& out) {
    const BesselKind kind = parse_kind(kind_s);
    if (int(s.has_value()) + int(theta.has_value()) + int(xi.has_value()) != 1)
        throw DomainError("exactly one of --s, --theta, --xi is required");
    IdentityId id;
    PointKind pk;
    double point;
    if (s) {
        pk = PointKind::LaplaceS;
        point = *s;
        switch (kind) {
            case BesselKind::J: id = IdentityId::S_JJ; break;
            case BesselKind::I: id = IdentityId::S_II; break;
            case BesselKind::K:
            case BesselKind::Kh:
                id = point < 1.0 ? IdentityId::S_KK_inside
                     : point == 1.0 ? IdentityId::S_K_at_1
                                    : IdentityId::S_KK_outside;
                break;
            default:
                throw DomainError("no closed s-form for kind Y; use --theta");
        }
    } else if (theta) {
        pk = PointKind::Theta;
        point = *theta;
        if (kind == BesselKind::J) id = IdentityId::T1_J;
        else if (kind == BesselKind::Y) id = IdentityId::T1_Y;
        else throw DomainError("--theta applies to kinds J and Y only");
    } else {
        pk = PointKind::Xi;
        point = *xi;
        if (kind == BesselKind::I) id = IdentityId::T1_I;
        else if (kind == BesselKind::K || kind == BesselKind::Kh)
            id = IdentityId::T1_K;
        else throw DomainError("--xi applies to kinds I, K, Kh only");
    }
    if (!convergence_ok(kind, nu, mu))
        throw ConvergenceError("convergence condition violated for these nu, mu");

    double closed = (s && kind != BesselKind::J && kind != BesselKind::I)
                        ? lt_closed(kind, nu, mu, point)
                        : closed_value(id, nu, mu, point);
    if (!s && kind == BesselKind::Kh) closed *= 2.0 / M_PI;

    double oracle = closed;
    std::int64_t evals = 0;
    if (with_oracle) {
        QuadratureResult q = generic_lhs(id, nu, mu, point, 1e-10, eval_budget());
        if (kind == BesselKind::Kh) q.value *= 2.0 / M_PI;
        oracle = q.value;
        evals = q.evaluations;
    }
    if (format == "json" || format == "csv") {
        const std::vector<ReportRow> rows = {
            make_row(to_string(id), nu, mu, point_kind_label(pk), point, closed,
                     oracle, evals, 1e-8)};
        emit(format == "csv" ? to_csv(rows) : to_json(rows), out);
    } else {
        std::string text = format_real(closed);
        if (with_oracle) text += "  oracle " + format_real(oracle);
        emit(text + "\n", out);
    }
    return 0;
}

int cmd_ilhi(const std::string& kind_s, double nu, double mu, double T, double s,
             bool with_limit) {
    const BesselKind kind = parse_kind(kind_s);
    const QuadratureResult r = ilhi(kind, nu, mu, T, s, eval_budget());
    std::cout << format_real(r.value) << "\n";
    if (with_limit) {
        const double L = lt_closed(kind, nu, mu, s);
        std::cout << "limit " << format_real(L) << "\ngap "
                  << format_real(std::abs(r.value - L)) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplace transforms of Bessel functions: closed forms, "
                 "quadrature verification, errata audit"};
    app.require_subcommand(1);

    std::string kind = "J", format, eval_format, out, grid_file, entry;
    double nu = 0.0, mu = 0.0, tol = 1e-8, T = 1.0;
    std::optional<double> s_opt, theta_opt, xi_opt;
    double s_plain = 1.0;
    bool with_oracle = false, with_limit = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one closed form");
    eval->add_option("--kind", kind, "J, Y, I, K or Kh")->required();
    eval->add_option("--nu", nu)->required();
    eval->add_option("--mu", mu)->required();
    eval->add_option("--s", s_opt, "Laplace point");
    eval->add_option("--theta", theta_opt, "trig angle in (0, pi/2)");
    eval->add_option("--xi", xi_opt, "hyperbolic angle > 0");
    eval->add_flag("--oracle", with_oracle, "also run the quadrature oracle");
    eval->add_option("--format", eval_format, "json or csv (default plain)");
    eval->add_option("--out", out, "write output to file");

    CLI::App* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("--tol", tol, "pass tolerance (default 1e-8)");
    verify->add_option("--format", format)->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out);
    verify->add_option("--grid", grid_file, "JSON grid override");

    CLI::App* errata = app.add_subcommand("errata", "audit the errata catalogue");
    errata->add_option("--format", format)->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    errata->add_option("--out", out);
    errata->add_option("--entry", entry, "audit a single entry id");

    CLI::App* ilhi_cmd = app.add_subcommand("ilhi", "incomplete integral over [0, T]");
    ilhi_cmd->add_option("--kind", kind)->required();
    ilhi_cmd->add_option("--nu", nu)->required();
    ilhi_cmd->add_option("--mu", mu)->required();
    ilhi_cmd->add_option("--T", T, "upper limit")->required();
    ilhi_cmd->add_option("--s", s_plain, "Laplace point")->required();
    ilhi_cmd->add_flag("--limit", with_limit, "also print the closed-form limit");

    try {
        app.parse(argc, argv);
        if (eval->parsed())
            return cmd_eval(kind, nu, mu, s_opt, theta_opt, xi_opt, with_oracle,
                            eval_format, out);
        if (verify->parsed()) return cmd_verify(tol, format, out, grid_file);
        if (errata->parsed()) return cmd_errata(format, out, entry);
        return cmd_ilhi(kind, nu, mu, T, s_plain, with_limit);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const lhi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
