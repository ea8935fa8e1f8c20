#include "osg.h"

#include <cmath>
#include <cstring>
#include <map>
#include <string>

#include "csv_io.hpp"
#include "entanglement.hpp"
#include "models.hpp"
#include "sweep.hpp"
#include "verify.hpp"
#include "version.hpp"

using namespace osg;

struct osg_params {
    PhysicalParams p;
};

namespace {

thread_local std::string g_last_error;

osg_status fail(osg_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Exceptions cross the C boundary as status codes.
template <typename Fn>
osg_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const VerificationError& e) {
        return fail(OSG_ERR_VERIFICATION, e.what());
    } catch (const TruncationError& e) {
        return fail(OSG_ERR_NUMERIC, e.what());
    } catch (const ContractError& e) {
        return fail(OSG_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(OSG_ERR_USAGE, e.what());
    }
}

double* field_by_key(PhysicalParams& p, const std::string& key) {
    static const std::map<std::string, double PhysicalParams::*> fields = {
        {"mass", &PhysicalParams::mass},         {"lambda", &PhysicalParams::lambda},
        {"epsilon", &PhysicalParams::epsilon},   {"hbar", &PhysicalParams::hbar},
        {"x1", &PhysicalParams::x1},             {"x2", &PhysicalParams::x2},
        {"sigma_x1", &PhysicalParams::sigma_x1}, {"sigma_x2", &PhysicalParams::sigma_x2},
        {"t1", &PhysicalParams::t1},             {"t2", &PhysicalParams::t2},
        {"t3", &PhysicalParams::t3},
    };
    const auto it = fields.find(key);
    if (it == fields.end()) return nullptr;
    return &(p.*(it->second));
}

Model to_model(osg_model m) { return m == OSG_MODEL_JC ? Model::JC : Model::SG; }

InitialState to_state(osg_initial_state s) {
    return s == OSG_STATE_EG0 ? InitialState::EG0 : InitialState::GG1;
}

void pack_rho(const TwoQubitDensityMatrix& rho, double out[32]) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            out[2 * (4 * i + j)] = rho.at(i, j).real();
            out[2 * (4 * i + j) + 1] = rho.at(i, j).imag();
        }
}

TwoQubitDensityMatrix unpack_rho(const double in[32]) {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m.at(i, j) = Complex(in[2 * (4 * i + j)], in[2 * (4 * i + j) + 1]);
    TwoQubitDensityMatrix::Tolerances tol;
    tol.hermiticity = 1e-8;
    tol.trace = 1e-6;
    tol.psd = 1e-6;
    return TwoQubitDensityMatrix::make(m, tol);
}

const char* model_name(osg_model m) { return m == OSG_MODEL_JC ? "jc" : "sg"; }
const char* state_name(osg_initial_state s) { return s == OSG_STATE_EG0 ? "eg0" : "gg1"; }

} // namespace

extern "C" {

osg_status osg_params_create(osg_params** out) {
    if (!out) return fail(OSG_ERR_USAGE, "osg_params_create: null output pointer");
    *out = new (std::nothrow) osg_params{};
    if (!*out) return fail(OSG_ERR_USAGE, "osg_params_create: allocation failed");
    return OSG_OK;
}

void osg_params_destroy(osg_params* p) { delete p; }

osg_status osg_params_set(osg_params* p, const char* key, double value) {
    if (!p || !key) return fail(OSG_ERR_USAGE, "osg_params_set: null argument");
    double* field = field_by_key(p->p, key);
    if (!field) return fail(OSG_ERR_USAGE, std::string("osg_params_set: unknown key '") + key + "'");
    *field = value;
    return OSG_OK;
}

osg_status osg_params_get(const osg_params* p, const char* key, double* out) {
    if (!p || !key || !out) return fail(OSG_ERR_USAGE, "osg_params_get: null argument");
    double* field = field_by_key(const_cast<osg_params*>(p)->p, key);
    if (!field) return fail(OSG_ERR_USAGE, std::string("osg_params_get: unknown key '") + key + "'");
    *out = *field;
    return OSG_OK;
}

osg_status osg_params_validate(const osg_params* p) {
    if (!p) return fail(OSG_ERR_USAGE, "osg_params_validate: null handle");
    try {
        const std::vector<std::string> warnings = p->p.validate();
        g_last_error.clear();
        for (const std::string& w : warnings) {
            if (!g_last_error.empty()) g_last_error += "; ";
            g_last_error += w;
        }
        return OSG_OK;
    } catch (const std::exception& e) {
        // a rejected configuration is a usage error, not a numeric failure
        return fail(OSG_ERR_USAGE, e.what());
    }
}

namespace {

osg_status check_grid(double t_start_rabi, double t_end_rabi, int steps) {
    if (steps < 2) return fail(OSG_ERR_USAGE, "steps: must be >= 2");
    if (t_start_rabi < 0.0) return fail(OSG_ERR_USAGE, "t_start: must be >= 0");
    if (t_end_rabi <= t_start_rabi) return fail(OSG_ERR_USAGE, "t_end: must exceed t_start");
    return OSG_OK;
}

} // namespace

osg_status osg_rabi_period(const osg_params* p, double* out) {
    if (!p || !out) return fail(OSG_ERR_USAGE, "osg_rabi_period: null argument");
    return guarded([&] {
        p->p.validate();
        *out = p->p.rabi_period();
        return OSG_OK;
    });
}

osg_status osg_params_set_time_rabi(osg_params* p, double t_rabi) {
    if (!p) return fail(OSG_ERR_USAGE, "osg_params_set_time_rabi: null handle");
    if (t_rabi < 0.0) return fail(OSG_ERR_USAGE, "osg_params_set_time_rabi: negative time");
    return guarded([&] {
        p->p = with_schedule(p->p, t_rabi * p->p.rabi_period());
        return OSG_OK;
    });
}

osg_status osg_build_rho(const osg_params* p, osg_model model, osg_initial_state initial,
                         double rho_out[32]) {
    if (!p || !rho_out) return fail(OSG_ERR_USAGE, "osg_build_rho: null argument");
    return guarded([&] {
        const TwoQubitDensityMatrix rho =
            to_model(model) == Model::SG
                ? build_rho_sg(p->p, to_state(initial))
                : build_rho_jc(p->p.epsilon_jc(), p->p.t1, to_state(initial));
        pack_rho(rho, rho_out);
        return OSG_OK;
    });
}

osg_status osg_analyze(const double rho[32], double tolerance, osg_report* out) {
    if (!rho || !out) return fail(OSG_ERR_USAGE, "osg_analyze: null argument");
    return guarded([&] {
        const double tol = tolerance > 0.0 ? tolerance : 1e-10;
        const EntanglementReport rep = analyze(unpack_rho(rho), tol);
        for (std::size_t i = 0; i < 4; ++i) out->ppt_eigenvalues[i] = rep.ppt_eigenvalues[i];
        for (std::size_t i = 0; i < 3; ++i) out->nu[i] = rep.nu[i];
        out->m_value = rep.m_value;
        out->separable = rep.separable ? 1 : 0;
        out->bell_violated = rep.bell_violated ? 1 : 0;
        return OSG_OK;
    });
}

osg_status osg_sweep(const osg_params* p, osg_model model, osg_initial_state initial,
                     double t_start_rabi, double t_end_rabi, int steps, osg_sweep_row* rows) {
    if (!p || !rows) return fail(OSG_ERR_USAGE, "osg_sweep: null argument");
    if (osg_status st = check_grid(t_start_rabi, t_end_rabi, steps); st != OSG_OK) return st;
    return guarded([&] {
        SweepGrid grid{t_start_rabi, t_end_rabi, steps};
        const std::vector<SweepRow> result =
            run_sweep(p->p, to_model(model), to_state(initial), grid);
        for (std::size_t i = 0; i < result.size(); ++i) {
            const SweepRow& r = result[i];
            rows[i] = osg_sweep_row{r.t_seconds, r.t_rabi,   r.nu1,      r.nu2,
                                    r.nu3,       r.m_value,  r.ppt_min,  r.damping1,
                                    r.damping2,  r.separable, r.bell_violated};
        }
        return OSG_OK;
    });
}

osg_status osg_sweep_to_csv(const osg_params* p, osg_model model, osg_initial_state initial,
                            double t_start_rabi, double t_end_rabi, int steps,
                            const char* csv_path, int verify_rows, int grid_n) {
    if (!p || !csv_path) return fail(OSG_ERR_USAGE, "osg_sweep_to_csv: null argument");
    if (osg_status st = check_grid(t_start_rabi, t_end_rabi, steps); st != OSG_OK) return st;
    return guarded([&] {
        SweepGrid grid{t_start_rabi, t_end_rabi, steps};
        SweepOptions options;
        options.verify_rows = verify_rows != 0;
        if (grid_n > 0) options.oracle_n = static_cast<std::size_t>(grid_n);
        const std::vector<SweepRow> rows =
            run_sweep(p->p, to_model(model), to_state(initial), grid, options);
        try {
            write_file(csv_path, sweep_csv(rows));
            write_file(std::string(csv_path) + ".meta",
                       meta_text(p->p, model_name(model), state_name(initial), grid));
        } catch (const std::exception& e) {
            return fail(OSG_ERR_IO, e.what());
        }
        return OSG_OK;
    });
}

osg_status osg_figure1(const osg_params* p, double t_start_rabi, double t_end_rabi, int steps,
                       const char* out_dir) {
    if (!p || !out_dir) return fail(OSG_ERR_USAGE, "osg_figure1: null argument");
    if (osg_status st = check_grid(t_start_rabi, t_end_rabi, steps); st != OSG_OK) return st;
    if (std::abs(p->p.x1 - p->p.x2) > 1e-9 * std::abs(p->p.x1))
        return fail(OSG_ERR_USAGE,
                    "figure mode requires x1 = x2 (equal effective couplings)");
    return guarded([&] {
        SweepGrid grid{t_start_rabi, t_end_rabi, steps};
        const Figure1 fig = compute_figure1(p->p, grid);
        const std::string dir(out_dir);
        try {
            write_file(dir + "/figure1_jc.csv", figure1_csv(fig.panel_jc));
            write_file(dir + "/figure1_sg.csv", figure1_csv(fig.panel_sg));
            write_file(dir + "/figure1_jc.csv.meta", meta_text(p->p, "jc", "gg1", grid));
            write_file(dir + "/figure1_sg.csv.meta", meta_text(p->p, "sg", "gg1", grid));
        } catch (const std::exception& e) {
            return fail(OSG_ERR_IO, e.what());
        }
        return OSG_OK;
    });
}

osg_status osg_verify(const osg_params* p, int grid_n, double tolerance, char* report,
                      size_t cap) {
    if (!p) return fail(OSG_ERR_USAGE, "osg_verify: null handle");
    return guarded([&] {
        VerifyOptions opt;
        if (grid_n > 0) opt.grid_n = static_cast<std::size_t>(grid_n);
        if (tolerance > 0.0) opt.tolerance_override = tolerance;
        const VerifyReport rep = run_verification(p->p, opt);
        if (report && cap > 0) {
            const std::string text = rep.to_text();
            const size_t len = std::min(cap - 1, text.size());
            std::memcpy(report, text.data(), len);
            report[len] = '\0';
        }
        if (!rep.all_passed())
            return fail(OSG_ERR_VERIFICATION, "one or more verification checks failed");
        return OSG_OK;
    });
}

const char* osg_last_error(void) { return g_last_error.c_str(); }

const char* osg_version(void) { return version_string(); }

} // extern "C"
