#pragma once

// CLI-side plumbing: key=value config files and the optional SVG renderer.
// Everything physics-related goes through the C API in osg.h.

#include <map>
#include <string>
#include <vector>

namespace osgcli {

struct Scenario {
    // physics keys forwarded verbatim to osg_params_set
    std::map<std::string, double> physics;
    std::string model = "sg";           // sg | jc
    std::string initial_state = "gg1";  // gg1 | eg0
    double t_start = 0.0;               // Rabi periods
    double t_end = 1.0;
    int steps = 201;
    std::string output = "sweep.csv";
    bool verify = false;
    int oracle_n = 0;                   // 0 = library default
    bool svg = false;
};

// Parses a flat key=value file ('#' starts a comment). Unknown keys and
// malformed lines throw std::runtime_error with the line number.
void load_config(const std::string& path, Scenario& scenario);

struct Series {
    std::string label;
    std::vector<double> y;
};

// Minimal deterministic line plot.
std::string render_svg(const std::string& title, const std::vector<double>& x,
                       const std::vector<Series>& series);

// Splits a CSV produced by this project into columns of doubles.
std::vector<std::vector<double>> read_csv_columns(const std::string& path,
                                                  std::vector<std::string>& header);

} // namespace osgcli
