#include "csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "version.hpp"

namespace osg {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "T_seconds,T_rabi,nu1,nu2,nu3,m_value,ppt_min,damping1,damping2,separable,bell_violated\n";
    for (const SweepRow& r : rows) {
        os << format_double(r.t_seconds) << ',' << format_double(r.t_rabi) << ','
           << format_double(r.nu1) << ',' << format_double(r.nu2) << ','
           << format_double(r.nu3) << ',' << format_double(r.m_value) << ','
           << format_double(r.ppt_min) << ',' << format_double(r.damping1) << ','
           << format_double(r.damping2) << ',' << r.separable << ',' << r.bell_violated
           << '\n';
    }
    return os.str();
}

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
    std::ostringstream os;
    os << "T_rabi,nu1_plus_nu2,two_nu2\n";
    for (const Figure1Row& r : rows)
        os << format_double(r.t_rabi) << ',' << format_double(r.nu1_plus_nu2) << ','
           << format_double(r.two_nu2) << '\n';
    return os.str();
}

std::string meta_text(const PhysicalParams& p, const std::string& model,
                      const std::string& initial, const SweepGrid& grid) {
    std::ostringstream os;
    os << "version=" << version_string() << '\n'
       << "mass=" << format_double(p.mass) << '\n'
       << "lambda=" << format_double(p.lambda) << '\n'
       << "epsilon=" << format_double(p.epsilon) << '\n'
       << "hbar=" << format_double(p.hbar) << '\n'
       << "x1=" << format_double(p.x1) << '\n'
       << "x2=" << format_double(p.x2) << '\n'
       << "sigma_x1=" << format_double(p.sigma_x1) << '\n'
       << "sigma_x2=" << format_double(p.sigma_x2) << '\n'
       << "model=" << model << '\n'
       << "initial_state=" << initial << '\n'
       << "t_start=" << format_double(grid.t_start_rabi) << '\n'
       << "t_end=" << format_double(grid.t_end_rabi) << '\n'
       << "steps=" << grid.steps << '\n'
       << "rabi_period_seconds=" << format_double(p.rabi_period()) << '\n';
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace osg
