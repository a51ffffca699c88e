#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("LHI_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kSmallGrid = R"([
  {"nu": 0.0, "mu": 0.0, "point_kind": "theta", "point": 0.8},
  {"nu": 0.7, "mu": 0.45, "point_kind": "xi", "point": 0.7},
  {"nu": 0.7, "mu": 0.45, "point_kind": "s", "point": 0.3},
  {"nu": 0.7, "mu": 0.45, "point_kind": "s", "point": 2.0}
])";

std::string write_grid() {
    const std::string path = "cli_test_grid.json";
    std::ofstream(path) << kSmallGrid;
    return path;
}

} // namespace

TEST_CASE("eval prints closed forms") {
    auto r = run("eval --kind J --nu 0 --mu 0 --s 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 10) == "0.70710678");

    r = run("eval --kind K --nu 0 --mu 0 --s 1");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.0).epsilon(1e-12));

    r = run("eval --kind I --nu 0.5 --mu 0.5 --xi 0.8 --oracle");
    CHECK(r.exit_code == 0);
    const double a = std::stod(r.out);
    const auto pos = r.out.find("oracle");
    REQUIRE(pos != std::string::npos);
    const double b = std::stod(r.out.substr(pos + 6));
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("eval usage and domain errors exit 2") {
    CHECK(run("eval --kind J --nu 0 --mu 0").exit_code == 2);          // no point
    CHECK(run("eval --kind Z --nu 0 --mu 0 --s 1").exit_code == 2);    // bad kind
    CHECK(run("eval --kind Y --nu 0 --mu 0 --s 1").exit_code == 2);    // no Y form
    CHECK(run("eval --kind J --nu -3 --mu 0 --s 1").exit_code == 2);   // divergent
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify on a custom grid") {
    const std::string grid = write_grid();
    auto r = run("verify --grid " + grid);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"identity\":\"T1_J\"") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(r.out.find("\"pass\":false") == std::string::npos);

    // tolerance below achievable accuracy must fail rows -> exit 1
    CHECK(run("verify --grid " + grid + " --tol 1e-15").exit_code == 1);

    // deterministic byte-identical output
    const auto r2 = run("verify --grid " + grid);
    CHECK(r.out == r2.out);

    // CSV column contract
    const auto csv = run("verify --grid " + grid + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("identity,nu,mu,point_kind,point,closed_form,oracle,"
                        "abs_err,rel_err,pass,evaluations\n", 0) == 0);
    std::remove(grid.c_str());
}

TEST_CASE("errata subcommand") {
    auto r = run("errata --entry \"6.628(5)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6.628(5)") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(run("errata --entry nonsense").exit_code == 2);
}

TEST_CASE("ilhi subcommand") {
    auto r = run("ilhi --kind J --nu 0 --mu 0 --T 40 --s 1 --limit");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(0.7071068).epsilon(1e-6));
    const auto gap_pos = r.out.find("gap ");
    REQUIRE(gap_pos != std::string::npos);
    CHECK(std::stod(r.out.substr(gap_pos + 4)) <= 1e-8);

    r = run("ilhi --kind I --nu 0 --mu 0 --T 1e-10 --s 1");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1e-10).epsilon(1e-5));

    CHECK(run("ilhi --kind J --nu -3 --mu 0 --T 1 --s 1").exit_code == 2);
}
