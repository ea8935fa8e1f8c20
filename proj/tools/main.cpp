// osg command line front end. Exit codes: 0 success, 1 usage error,
// 2 verification failure, 3 numeric contract violation.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "osg.h"

namespace {

int status_to_exit(osg_status st) {
    switch (st) {
        case OSG_OK: return 0;
        case OSG_ERR_VERIFICATION: return 2;
        case OSG_ERR_NUMERIC: return 3;
        default: return 1;   // usage / io
    }
}

int report_failure(const char* what, osg_status st) {
    std::fprintf(stderr, "error: %s: %s\n", what, osg_last_error());
    return status_to_exit(st);
}

struct ParamsHandle {
    osg_params* p = nullptr;
    ~ParamsHandle() { osg_params_destroy(p); }
};

int apply_scenario(const osgcli::Scenario& s, osg_params* p) {
    for (const auto& [key, value] : s.physics) {
        const osg_status st = osg_params_set(p, key.c_str(), value);
        if (st != OSG_OK) return report_failure("setting parameter", st);
    }
    const osg_status st = osg_params_validate(p);
    if (st != OSG_OK) return report_failure("invalid parameters", st);
    if (osg_last_error()[0] != '\0') std::fprintf(stderr, "warning: %s\n", osg_last_error());
    return 0;
}

osg_model model_of(const osgcli::Scenario& s) {
    return s.model == "jc" ? OSG_MODEL_JC : OSG_MODEL_SG;
}

osg_initial_state state_of(const osgcli::Scenario& s) {
    return s.initial_state == "eg0" ? OSG_STATE_EG0 : OSG_STATE_GG1;
}

int run_sweep_cmd(const osgcli::Scenario& s) {
    ParamsHandle h;
    if (osg_params_create(&h.p) != OSG_OK) return 1;
    if (int rc = apply_scenario(s, h.p)) return rc;

    osg_status st = osg_sweep_to_csv(h.p, model_of(s), state_of(s), s.t_start, s.t_end,
                                     s.steps, s.output.c_str(), s.verify ? 1 : 0, s.oracle_n);
    if (st != OSG_OK) return report_failure("sweep", st);
    std::printf("wrote %s (+.meta)\n", s.output.c_str());

    if (s.svg) {
        std::vector<osg_sweep_row> rows(static_cast<std::size_t>(s.steps));
        st = osg_sweep(h.p, model_of(s), state_of(s), s.t_start, s.t_end, s.steps, rows.data());
        if (st != OSG_OK) return report_failure("sweep (svg pass)", st);
        std::vector<double> x;
        osgcli::Series m{"m_value", {}}, d1{"damping1", {}}, d2{"damping2", {}};
        for (const auto& r : rows) {
            x.push_back(r.t_rabi);
            m.y.push_back(r.m_value);
            d1.y.push_back(r.damping1);
            d2.y.push_back(r.damping2);
        }
        const std::string path = s.output + ".svg";
        try {
            std::string svg = osgcli::render_svg("sweep (" + s.model + ", " + s.initial_state + ")",
                                                 x, {m, d1, d2});
            FILE* f = std::fopen(path.c_str(), "wb");
            if (!f) throw std::runtime_error("cannot open " + path);
            std::fwrite(svg.data(), 1, svg.size(), f);
            std::fclose(f);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: svg: %s\n", e.what());
            return 1;
        }
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int run_figure1_cmd(const osgcli::Scenario& s, const std::string& out_dir) {
    ParamsHandle h;
    if (osg_params_create(&h.p) != OSG_OK) return 1;
    if (int rc = apply_scenario(s, h.p)) return rc;

    const osg_status st = osg_figure1(h.p, s.t_start, s.t_end, s.steps, out_dir.c_str());
    if (st != OSG_OK) return report_failure("figure1", st);
    std::printf("wrote %s/figure1_jc.csv and %s/figure1_sg.csv\n", out_dir.c_str(),
                out_dir.c_str());

    if (s.svg) {
        for (const char* panel : {"jc", "sg"}) {
            const std::string csv = out_dir + "/figure1_" + panel + ".csv";
            try {
                std::vector<std::string> header;
                const auto cols = osgcli::read_csv_columns(csv, header);
                osgcli::Series a{"nu1+nu2", cols.at(1)}, b{"2 nu2", cols.at(2)};
                const std::string svg = osgcli::render_svg(std::string("figure1 (") + panel + ")",
                                                           cols.at(0), {a, b});
                FILE* f = std::fopen((csv + ".svg").c_str(), "wb");
                if (!f) throw std::runtime_error("cannot open " + csv + ".svg");
                std::fwrite(svg.data(), 1, svg.size(), f);
                std::fclose(f);
            } catch (const std::exception& e) {
                std::fprintf(stderr, "error: svg: %s\n", e.what());
                return 1;
            }
        }
        std::printf("wrote svg plots\n");
    }
    return 0;
}

int run_verify_cmd(const osgcli::Scenario& s, double tolerance) {
    ParamsHandle h;
    if (osg_params_create(&h.p) != OSG_OK) return 1;
    if (int rc = apply_scenario(s, h.p)) return rc;

    std::vector<char> report(16384);
    const osg_status st = osg_verify(h.p, s.oracle_n, tolerance, report.data(), report.size());
    std::fputs(report.data(), stdout);
    if (st != OSG_OK) {
        std::fprintf(stderr, "error: verify: %s\n", osg_last_error());
        return status_to_exit(st);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("osg ") + osg_version() +
                 " - two-atom cavity photon exchange with quantized atomic motion"};
    app.require_subcommand(1);

    osgcli::Scenario scenario;
    std::string config_path;
    std::string out_dir = ".";
    double tolerance = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key=value scenario file");
        cmd->add_option("--mass", scenario.physics["mass"], "atom mass (kg)");
        cmd->add_option("--lambda", scenario.physics["lambda"], "mode wavelength (m)");
        cmd->add_option("--epsilon", scenario.physics["epsilon"], "atom-field coupling (1/s)");
        cmd->add_option("--x1", scenario.physics["x1"], "packet 1 center (m)");
        cmd->add_option("--x2", scenario.physics["x2"], "packet 2 center (m)");
        cmd->add_option("--sigma-x1", scenario.physics["sigma_x1"], "packet 1 width (m)");
        cmd->add_option("--sigma-x2", scenario.physics["sigma_x2"], "packet 2 width (m)");
        cmd->add_option("--t-start", scenario.t_start, "grid start (Rabi periods)");
        cmd->add_option("--t-end", scenario.t_end, "grid end (Rabi periods)");
        cmd->add_option("--steps", scenario.steps, "grid points");
        cmd->add_option("--oracle-n", scenario.oracle_n, "oracle grid points (power of two)");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "run a T sweep and write CSV");
    add_common(sweep);
    sweep->add_option("--model", scenario.model, "sg | jc")
        ->check(CLI::IsMember({"sg", "jc"}));
    sweep->add_option("--initial-state", scenario.initial_state, "gg1 | eg0")
        ->check(CLI::IsMember({"gg1", "eg0"}));
    sweep->add_option("--output", scenario.output, "output CSV path");
    sweep->add_flag("--verify", scenario.verify, "cross-check each row against the grid oracle");
    sweep->add_flag("--svg", scenario.svg, "also render a line plot");

    CLI::App* figure1 = app.add_subcommand("figure1", "emit both model panels (gg1)");
    add_common(figure1);
    figure1->add_option("--output-dir", out_dir, "directory for the two CSV files");
    figure1->add_flag("--svg", scenario.svg, "also render line plots");

    CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
    add_common(verify);
    verify->add_option("--tolerance", tolerance, "override the built-in check tolerances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        auto option_set = [&](const std::string& key) {
            std::string flag = "--" + key;
            for (char& ch : flag)
                if (ch == '_') ch = '-';
            const CLI::Option* opt = active->get_option_no_throw(flag);
            return opt && opt->count() > 0;
        };

        // registration pre-creates every physics map entry; keep only the
        // keys that were actually passed so config/library defaults apply
        for (auto it = scenario.physics.begin(); it != scenario.physics.end();)
            it = option_set(it->first) ? std::next(it) : scenario.physics.erase(it);

        // command-line flags override the config file
        if (!config_path.empty()) {
            osgcli::Scenario merged;
            osgcli::load_config(config_path, merged);
            for (const auto& [k, v] : scenario.physics) merged.physics[k] = v;
            if (option_set("model")) merged.model = scenario.model;
            if (option_set("initial_state")) merged.initial_state = scenario.initial_state;
            if (option_set("t_start")) merged.t_start = scenario.t_start;
            if (option_set("t_end")) merged.t_end = scenario.t_end;
            if (option_set("steps")) merged.steps = scenario.steps;
            if (option_set("output")) merged.output = scenario.output;
            if (option_set("oracle_n")) merged.oracle_n = scenario.oracle_n;
            if (scenario.verify) merged.verify = true;
            if (scenario.svg) merged.svg = true;
            scenario = merged;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    if (sweep->parsed()) return run_sweep_cmd(scenario);
    if (figure1->parsed()) return run_figure1_cmd(scenario, out_dir);
    if (verify->parsed()) return run_verify_cmd(scenario, tolerance);
    return 1;
}
