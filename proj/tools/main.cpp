// stekdiff: convergence studies for the one-dimensional time-fractional
// diffusion problem with nonlocal (Steklov-type) boundary conditions.
//
// Option precedence: command-line flag > STEKDIFF_* environment variable >
// --config file entry > built-in default.
//
// Exit codes: 0 success, 2 configuration error, 3 degenerate linear system,
// 4 no stability guarantee while --strict is in force.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stekdiff/errors.hpp"
#include "stekdiff/study.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<std::pair<int, int>> parse_grids(const std::string& text) {
    std::vector<std::pair<int, int>> grids;
    for (const std::string& entry : split(text, ',')) {
        if (entry.empty())
            throw std::invalid_argument("empty grid entry in \"" + text + "\"");
        const auto xpos = entry.find('x');
        try {
            if (xpos == std::string::npos) {
                const int n = std::stoi(entry);
                grids.emplace_back(n, n);
            } else {
                grids.emplace_back(std::stoi(entry.substr(0, xpos)),
                                   std::stoi(entry.substr(xpos + 1)));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid entry \"" + entry +
                                        "\" (want N or NxNT)");
        }
    }
    return grids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "stekdiff: convergence studies for 1-D time-fractional diffusion\n"
        "with nonlocal two-point boundary conditions"};

    double nu = 0.5, alpha = 0.0, beta = 0.0, gamma = 0.0, horizon = 1.0;
    std::string grids_text = "160,320,640";
    bool equal_steps_flag = false;
    std::string norms_text = "l2,c";
    std::string format_text = "table";
    std::string out_path;
    std::string problem = "mms";
    std::string config_path;
    bool strict = false;

    auto* o_nu = app.add_option("--nu", nu, "fractional order, in (0,1)")
                     ->envname("STEKDIFF_NU");
    auto* o_alpha = app.add_option("--alpha", alpha, "u(0,t) = alpha u(1,t)")
                        ->envname("STEKDIFF_ALPHA");
    auto* o_beta =
        app.add_option("--beta", beta, "flux proportionality factor")
            ->envname("STEKDIFF_BETA");
    auto* o_gamma =
        app.add_option("--gamma", gamma, "boundary reaction coefficient")
            ->envname("STEKDIFF_GAMMA");
    auto* o_T = app.add_option("--T", horizon, "final time")
                    ->envname("STEKDIFF_T");
    auto* o_grids =
        app.add_option("--grids", grids_text,
                       "comma list of grids, each N or NxNT (default "
                       "160,320,640)")
            ->envname("STEKDIFF_GRIDS");
    auto* o_eq = app.add_flag("--equal-steps", equal_steps_flag,
                              "enforce N == N_T on every grid")
                     ->envname("STEKDIFF_EQUAL_STEPS");
    auto* o_norms = app.add_option("--norms", norms_text,
                                   "subset of l2,c to report")
                        ->envname("STEKDIFF_NORMS");
    auto* o_format = app.add_option("--format", format_text,
                                    "output format: table, csv or json")
                         ->envname("STEKDIFF_FORMAT");
    auto* o_out = app.add_option("--out", out_path,
                                 "write the report to this path instead of "
                                 "stdout")
                      ->envname("STEKDIFF_OUT");
    auto* o_problem = app.add_option("--problem", problem,
                                     "problem source (only \"mms\", the "
                                     "manufactured family)")
                          ->envname("STEKDIFF_PROBLEM");
    app.add_option("--config", config_path,
                   "JSON file with defaults for any of the above keys")
        ->envname("STEKDIFF_CONFIG");
    auto* o_strict =
        app.add_flag("--strict", strict,
                     "fail (exit 4) when no stability guarantee applies")
            ->envname("STEKDIFF_STRICT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // Config file fills in whatever neither a flag nor an environment
        // variable has set.
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw std::invalid_argument("cannot open config file " +
                                            config_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument("bad config file " + config_path +
                                            ": " + e.what());
            }
            auto take = [&j](const CLI::Option* opt, const char* key,
                             auto& value) {
                if (opt->count() == 0 && j.contains(key))
                    value = j.at(key).get<std::decay_t<decltype(value)>>();
            };
            take(o_nu, "nu", nu);
            take(o_alpha, "alpha", alpha);
            take(o_beta, "beta", beta);
            take(o_gamma, "gamma", gamma);
            take(o_T, "T", horizon);
            take(o_grids, "grids", grids_text);
            take(o_eq, "equal_steps", equal_steps_flag);
            take(o_norms, "norms", norms_text);
            take(o_format, "format", format_text);
            take(o_out, "out", out_path);
            take(o_problem, "problem", problem);
            take(o_strict, "strict", strict);
        }

        stekdiff::StudyConfig cfg;
        cfg.nu = nu;
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.gamma = gamma;
        cfg.horizon = horizon;
        cfg.grids = parse_grids(grids_text);
        bool all_equal = true;
        for (const auto& [n_space, n_time] : cfg.grids)
            all_equal = all_equal && n_space == n_time;
        cfg.equal_steps = equal_steps_flag || all_equal;
        if (equal_steps_flag && !all_equal)
            throw std::invalid_argument(
                "--equal-steps conflicts with a grid entry where N != N_T");

        cfg.norm_l2 = cfg.norm_c = false;
        for (const std::string& n : split(norms_text, ',')) {
            if (n == "l2")
                cfg.norm_l2 = true;
            else if (n == "c")
                cfg.norm_c = true;
            else
                throw std::invalid_argument("unknown norm \"" + n +
                                            "\" (expected l2 or c)");
        }
        cfg.format = stekdiff::parse_format(format_text);
        cfg.problem = problem;

        if (strict) {
            const stekdiff::StabilityVerdict v =
                stekdiff::classify_stability(cfg.alpha, cfg.beta, cfg.gamma);
            if (v.kind == stekdiff::StabilityCase::NoGuarantee) {
                std::cerr << "stekdiff: no stability guarantee for alpha="
                          << cfg.alpha << ", beta=" << cfg.beta
                          << ", gamma=" << cfg.gamma
                          << " and --strict is in force\n";
                return 4;
            }
        }

        const stekdiff::StudyReport report = stekdiff::run_study(cfg);
        const std::string body = stekdiff::emit_report(report, cfg.format);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw std::invalid_argument("cannot write to " + out_path);
            out << body;
        }
        return 0;
    } catch (const stekdiff::DegenerateSystem& e) {
        std::cerr << "stekdiff: degenerate linear system: " << e.what()
                  << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "stekdiff: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "stekdiff: " << e.what() << "\n";
        return 1;
    }
}
