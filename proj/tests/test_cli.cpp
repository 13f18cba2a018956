#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "stekdiff/mms.hpp"
#include "stekdiff/stepper.hpp"

#ifndef STEKDIFF_CLI_PATH
#error "STEKDIFF_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs `env_prefix <cli> args` through the shell, capturing stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + " " + STEKDIFF_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/stekdiff_test_") + name;
}

} // namespace

TEST_CASE("happy path: csv to stdout, exit 0") {
    const RunResult r = run_cli(
        "--nu 0.5 --alpha 3 --beta 2 --gamma -5 --grids 8,16 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("h,err_l2,co_l2,err_c,co_c\n", 0) == 0);
    CHECK(r.out.find("1/8,") != std::string::npos);
    CHECK(r.out.find("1/16,") != std::string::npos);
}

TEST_CASE("repeated runs emit identical bytes") {
    const std::string args =
        "--nu 0.3 --alpha 0.7 --beta 0.1 --gamma -3 --grids 8,16 --format json";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes exactly what stdout would carry") {
    const std::string path = temp_path("out.csv");
    std::remove(path.c_str());
    const std::string base =
        "--nu 0.5 --alpha 3 --beta 2 --gamma -5 --grids 8 --format csv";
    const RunResult direct = run_cli(base);
    const RunResult filed = run_cli(base + " --out " + path);
    CHECK(filed.status == 0);
    CHECK(filed.out.empty());

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(body == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run_cli("--nu 1.5 --grids 8").status == 2);       // nu out of range
    CHECK(run_cli("--grids 8 --format yaml").status == 2);  // unknown format
    CHECK(run_cli("--grids 8 --norms l3").status == 2);     // unknown norm
    CHECK(run_cli("--grids ''").status == 2);               // empty grids
    CHECK(run_cli("--grids 8x9,4 --equal-steps").status == 2);
    CHECK(run_cli("--grids abc").status == 2);
    CHECK(run_cli("--no-such-flag").status == 2);
    CHECK(run_cli("--grids 8 --problem tabulated").status == 2);
    CHECK(run_cli("--config /nonexistent.json").status == 2);
}

TEST_CASE("--strict turns a missing guarantee into exit 4") {
    // alpha*beta*gamma > 0 lies outside every proven region
    const std::string args = "--alpha 2 --beta -5 --gamma -10 --grids 8";
    CHECK(run_cli(args).status == 0);
    CHECK(run_cli(args + " --strict").status == 4);
    // inside a region, --strict is inert
    CHECK(run_cli("--alpha 3 --beta 2 --gamma -5 --grids 8 --strict").status ==
          0);
}

TEST_CASE("a degenerate linear system exits with 3") {
    // Recover the gamma that annihilates the closure denominator of the very
    // first step (the denominator is linear in gamma) and feed it back in.
    using namespace stekdiff;
    ProblemSpec p;
    p.nu = 0.5;
    p.alpha = 2.0;
    p.beta = 0.5;
    p.gamma = 0.0;
    p.horizon = 1.0;
    const ManufacturedProblem mp = make_problem(p.nu, p.alpha, p.beta, 0.0);
    p.k = mp.problem.k;
    p.f = mp.problem.f;
    p.mu = mp.problem.mu;
    p.u0 = mp.problem.u0;

    const int n_space = 8;
    const GridSpec g = build_grid(p, n_space, n_space);
    SolutionHistory hist;
    hist.grid = g;
    GridFunction y0(n_space + 1);
    for (int i = 0; i <= n_space; ++i) y0[i] = p.u0(g.x(i));
    hist.layers.push_back(y0);
    const StepSystem sys =
        assemble_step(p, g, hist, compute_weights(p.nu, g.sigma, 0, g.tau));

    const int m = n_space - 1;
    std::vector<std::vector<double>> T(m, std::vector<double>(m, 0.0));
    std::vector<double> d(m, 0.0);
    for (int i = 1; i <= m; ++i) {
        if (i > 1) T[i - 1][i - 2] = sys.sub[i];
        T[i - 1][i - 1] = sys.diag[i];
        if (i < m) T[i - 1][i] = sys.sup[i];
    }
    d[0] += -sys.sub[1] * p.alpha;
    d[m - 1] += -sys.sup[n_space - 1];
    const std::vector<double> q = oracle::dense_solve(T, d);
    const double denom0 = sys.flux_y0 * p.alpha + sys.flux_y1 * q[0] +
                          sys.flux_yNm1 * q[m - 1] + sys.flux_yN;
    const double gamma_star = denom0 * g.h / (2.0 * g.sigma);

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", gamma_star);
    const RunResult r = run_cli(std::string("--nu 0.5 --alpha 2 --beta 0.5 ") +
                                "--gamma " + buf + " --grids 8 --equal-steps");
    CHECK(r.status == 3);
}

TEST_CASE("precedence: flag beats environment beats config file") {
    const std::string cfg_path = temp_path("cfg.json");
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"nu": 0.3, "alpha": 3, "beta": 2, "gamma": -5,)"
            << R"( "grids": "4,8", "format": "json"})";
    }

    // config file only
    nlohmann::json j = nlohmann::json::parse(
        run_cli("--config " + cfg_path).out);
    CHECK(j["config"]["nu"].get<double>() == doctest::Approx(0.3));

    // environment overrides the file
    j = nlohmann::json::parse(
        run_cli("--config " + cfg_path, "STEKDIFF_NU=0.7").out);
    CHECK(j["config"]["nu"].get<double>() == doctest::Approx(0.7));

    // flag overrides both
    j = nlohmann::json::parse(
        run_cli("--config " + cfg_path + " --nu 0.9", "STEKDIFF_NU=0.7").out);
    CHECK(j["config"]["nu"].get<double>() == doctest::Approx(0.9));

    std::remove(cfg_path.c_str());
}

TEST_CASE("mixed NxNT grids run without the equal-steps lockstep") {
    const RunResult r = run_cli(
        "--nu 0.5 --alpha 3 --beta 2 --gamma -5 --grids 8x16,16x32 "
        "--format json");
    REQUIRE(r.status == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["equal_steps"].get<bool>() == false);
    CHECK(j["rows"][0]["N"].get<int>() == 8);
    CHECK(j["rows"][0]["Nt"].get<int>() == 16);
    CHECK(j["rows"][1]["Nt"].get<int>() == 32);
}

TEST_CASE("table output reaches stdout with the study header") {
    const RunResult r = run_cli(
        "--nu 0.5 --alpha 3 --beta 2 --gamma -5 --grids 8 --format table");
    CHECK(r.status == 0);
    CHECK(r.out.find("convergence study:") != std::string::npos);
    CHECK(r.out.find("stability: case2") != std::string::npos);
}
