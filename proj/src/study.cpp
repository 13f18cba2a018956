#include "stekdiff/study.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "stekdiff/field.hpp"
#include "stekdiff/mms.hpp"
#include "stekdiff/stepper.hpp"

namespace stekdiff {

namespace {

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

std::string fmt_fixed3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

nlohmann::ordered_json stability_json(const StabilityVerdict& v) {
    nlohmann::ordered_json j;
    j["case"] = to_string(v.kind);
    if (v.delta)
        j["delta"] = *v.delta;
    else
        j["delta"] = nullptr;
    if (v.transformed) {
        j["alpha1"] = v.transformed->alpha1;
        j["beta1"] = v.transformed->beta1;
        j["gamma1"] = v.transformed->gamma1;
    } else {
        j["alpha1"] = nullptr;
        j["beta1"] = nullptr;
        j["gamma1"] = nullptr;
    }
    return j;
}

StabilityCase case_from_string(const std::string& s) {
    if (s == "direct") return StabilityCase::Direct;
    if (s == "case1") return StabilityCase::Case1;
    if (s == "case2") return StabilityCase::Case2;
    if (s == "no_guarantee") return StabilityCase::NoGuarantee;
    throw std::invalid_argument("unknown stability case: " + s);
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown format: " + name +
                                " (expected table, csv or json)");
}

std::string to_string(ReportFormat f) {
    switch (f) {
    case ReportFormat::Table: return "table";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    }
    return "table";
}

StudyReport run_study(const StudyConfig& config) {
    if (config.problem != "mms")
        throw std::invalid_argument(
            "unknown problem source \"" + config.problem +
            "\"; file-driven runs support the manufactured family only");
    const ManufacturedProblem mp = make_problem(
        config.nu, config.alpha, config.beta, config.gamma, config.horizon);
    return run_study(config, mp.problem, mp.exact);
}

StudyReport run_study(const StudyConfig& config, const ProblemSpec& p,
                      const SpaceTimeFn& exact) {
    if (config.grids.empty())
        throw std::invalid_argument("a study needs at least one grid");
    if (!config.norm_l2 && !config.norm_c)
        throw std::invalid_argument("select at least one norm");
    if (!exact)
        throw std::invalid_argument("exact solution callable is empty");
    for (const auto& [n_space, n_time] : config.grids) {
        if (n_space < 2 || n_time < 1)
            throw std::invalid_argument("grid too small (need N >= 2, N_T >= 1)");
        if (config.equal_steps && n_space != n_time)
            throw std::invalid_argument(
                "equal-steps mode requires N == N_T on every grid");
    }

    StudyReport rep;
    rep.config = config;
    // The problem's own parameters are authoritative for the record.
    rep.config.nu = p.nu;
    rep.config.alpha = p.alpha;
    rep.config.beta = p.beta;
    rep.config.gamma = p.gamma;
    rep.config.horizon = p.horizon;

    rep.warnings = validate_problem(p);
    rep.stability = classify_stability(p.alpha, p.beta, p.gamma);
    if (rep.stability.kind == StabilityCase::NoGuarantee)
        rep.warnings.push_back(
            "no stability guarantee for alpha=" + fmt_short(p.alpha) +
            ", beta=" + fmt_short(p.beta) + ", gamma=" + fmt_short(p.gamma));

    struct Outcome {
        double err_l2, err_c, ms;
    };
    auto run_one = [&p, &exact](int n_space, int n_time) {
        const auto start = std::chrono::steady_clock::now();
        const GridSpec grid = build_grid(p, n_space, n_time);
        const SolutionHistory hist = advance(p, grid);
        double el2 = 0.0, ec = 0.0;
        for (int n = 0; n <= grid.n_time; ++n) {
            const GridFunction z =
                error_field(hist.layers[n], exact, grid, grid.t(n));
            el2 = std::max(el2, l2_norm(z, grid));
            ec = std::max(ec, c_norm(z));
        }
        const std::chrono::duration<double, std::milli> dt =
            std::chrono::steady_clock::now() - start;
        return Outcome{el2, ec, dt.count()};
    };

    // Grids run concurrently but results are gathered in grid order, so the
    // report does not depend on scheduling.
    std::vector<std::future<Outcome>> futures;
    futures.reserve(config.grids.size());
    for (const auto& [n_space, n_time] : config.grids)
        futures.push_back(std::async(std::launch::async, run_one, n_space,
                                     n_time));

    for (std::size_t g = 0; g < config.grids.size(); ++g) {
        const Outcome out = futures[g].get();
        GridResult row;
        row.n_space = config.grids[g].first;
        row.n_time = config.grids[g].second;
        row.h = 1.0 / row.n_space;
        row.tau = p.horizon / row.n_time;
        row.err_l2 = out.err_l2;
        row.err_c = out.err_c;
        row.elapsed_ms = out.ms;
        rep.rows.push_back(row);
    }

    if (rep.rows.size() >= 2) {
        std::vector<std::pair<double, double>> hl2, hc;
        for (const GridResult& r : rep.rows) {
            hl2.emplace_back(r.h, r.err_l2);
            hc.emplace_back(r.h, r.err_c);
        }
        try {
            rep.co_l2 = convergence_order(hl2);
            rep.co_c = convergence_order(hc);
        } catch (const std::invalid_argument& e) {
            rep.warnings.push_back(std::string("observed order unavailable: ") +
                                   e.what());
        }
    }
    return rep;
}

std::string emit_report(const StudyReport& report, ReportFormat format) {
    const StudyConfig& cfg = report.config;

    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "h,err_l2,co_l2,err_c,co_c\n";
        for (std::size_t j = 0; j < report.rows.size(); ++j) {
            const GridResult& r = report.rows[j];
            os << "1/" << r.n_space << ",";
            if (cfg.norm_l2) os << fmt_sci(r.err_l2);
            os << ",";
            if (cfg.norm_l2 && j > 0 && j - 1 < report.co_l2.size())
                os << fmt_fixed3(report.co_l2[j - 1]);
            os << ",";
            if (cfg.norm_c) os << fmt_sci(r.err_c);
            os << ",";
            if (cfg.norm_c && j > 0 && j - 1 < report.co_c.size())
                os << fmt_fixed3(report.co_c[j - 1]);
            os << "\n";
        }
        return os.str();
    }

    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["config"] = {{"nu", cfg.nu},
                       {"alpha", cfg.alpha},
                       {"beta", cfg.beta},
                       {"gamma", cfg.gamma},
                       {"T", cfg.horizon},
                       {"grids", cfg.grids},
                       {"equal_steps", cfg.equal_steps},
                       {"norms", [&] {
                            std::vector<std::string> n;
                            if (cfg.norm_l2) n.push_back("l2");
                            if (cfg.norm_c) n.push_back("c");
                            return n;
                        }()},
                       {"problem", cfg.problem}};
        j["rows"] = nlohmann::ordered_json::array();
        for (const GridResult& r : report.rows)
            j["rows"].push_back({{"N", r.n_space},
                                 {"Nt", r.n_time},
                                 {"h", r.h},
                                 {"tau", r.tau},
                                 {"err_l2", r.err_l2},
                                 {"err_c", r.err_c}});
        j["co_l2"] = report.co_l2;
        j["co_c"] = report.co_c;
        j["stability"] = stability_json(report.stability);
        j["warnings"] = report.warnings;
        return j.dump(2) + "\n";
    }

    // Human-readable table, mirroring the usual refinement-table layout.
    std::ostringstream os;
    os << "convergence study: nu=" << fmt_short(cfg.nu)
       << " alpha=" << fmt_short(cfg.alpha) << " beta=" << fmt_short(cfg.beta)
       << " gamma=" << fmt_short(cfg.gamma) << " T=" << fmt_short(cfg.horizon)
       << "\n";
    os << "stability: " << to_string(report.stability.kind);
    if (report.stability.delta && report.stability.transformed) {
        os << "  delta=" << fmt_short(*report.stability.delta)
           << "  alpha1=" << fmt_short(report.stability.transformed->alpha1)
           << "  beta1=" << fmt_short(report.stability.transformed->beta1)
           << "  gamma1=" << fmt_short(report.stability.transformed->gamma1);
    }
    os << "\n\n";

    os << std::setw(10) << "h" << std::setw(14) << "err_l2" << std::setw(9)
       << "co_l2" << std::setw(14) << "err_c" << std::setw(9) << "co_c"
       << std::setw(12) << "ms" << "\n";
    for (std::size_t j = 0; j < report.rows.size(); ++j) {
        const GridResult& r = report.rows[j];
        const std::string hs = "1/" + std::to_string(r.n_space);
        os << std::setw(10) << hs;
        os << std::setw(14) << (cfg.norm_l2 ? fmt_sci(r.err_l2) : "-");
        os << std::setw(9)
           << (cfg.norm_l2 && j > 0 && j - 1 < report.co_l2.size()
                   ? fmt_fixed3(report.co_l2[j - 1])
                   : "-");
        os << std::setw(14) << (cfg.norm_c ? fmt_sci(r.err_c) : "-");
        os << std::setw(9)
           << (cfg.norm_c && j > 0 && j - 1 < report.co_c.size()
                   ? fmt_fixed3(report.co_c[j - 1])
                   : "-");
        os << std::setw(12) << fmt_fixed3(r.elapsed_ms);
        os << "\n";
    }
    if (!report.warnings.empty()) {
        os << "\n";
        for (const std::string& w : report.warnings)
            os << "warning: " << w << "\n";
    }
    return os.str();
}

StudyReport report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    StudyReport rep;

    const nlohmann::json& c = j.at("config");
    rep.config.nu = c.at("nu").get<double>();
    rep.config.alpha = c.at("alpha").get<double>();
    rep.config.beta = c.at("beta").get<double>();
    rep.config.gamma = c.at("gamma").get<double>();
    rep.config.horizon = c.at("T").get<double>();
    rep.config.grids = c.at("grids").get<std::vector<std::pair<int, int>>>();
    rep.config.equal_steps = c.at("equal_steps").get<bool>();
    rep.config.norm_l2 = false;
    rep.config.norm_c = false;
    for (const auto& n : c.at("norms")) {
        if (n.get<std::string>() == "l2") rep.config.norm_l2 = true;
        if (n.get<std::string>() == "c") rep.config.norm_c = true;
    }
    rep.config.problem = c.at("problem").get<std::string>();

    for (const auto& rj : j.at("rows")) {
        GridResult r;
        r.n_space = rj.at("N").get<int>();
        r.n_time = rj.at("Nt").get<int>();
        r.h = rj.at("h").get<double>();
        r.tau = rj.at("tau").get<double>();
        r.err_l2 = rj.at("err_l2").get<double>();
        r.err_c = rj.at("err_c").get<double>();
        rep.rows.push_back(r);
    }
    rep.co_l2 = j.at("co_l2").get<std::vector<double>>();
    rep.co_c = j.at("co_c").get<std::vector<double>>();

    const nlohmann::json& s = j.at("stability");
    rep.stability.kind = case_from_string(s.at("case").get<std::string>());
    if (!s.at("delta").is_null())
        rep.stability.delta = s.at("delta").get<double>();
    if (!s.at("alpha1").is_null()) {
        TransformedParams tp;
        tp.alpha1 = s.at("alpha1").get<double>();
        tp.beta1 = s.at("beta1").get<double>();
        tp.gamma1 = s.at("gamma1").get<double>();
        rep.stability.transformed = tp;
    }
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    return rep;
}

} // namespace stekdiff
