#include "cli_support.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace osgcli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

const std::set<std::string> kPhysicsKeys = {"mass", "lambda",  "epsilon",  "hbar",
                                            "x1",   "x2",      "sigma_x1", "sigma_x2",
                                            "t1",   "t2",      "t3"};

double parse_double(const std::string& value, const std::string& key, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        std::ostringstream os;
        os << "config line " << line << ": bad numeric value for '" << key << "'";
        throw std::runtime_error(os.str());
    }
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    std::ostringstream os;
    os << "config line " << line << ": bad boolean value for '" << key << "'";
    throw std::runtime_error(os.str());
}

} // namespace

void load_config(const std::string& path, Scenario& s) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::string raw;
    int line = 0;
    while (std::getline(f, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "config line " << line << ": expected key=value";
            throw std::runtime_error(os.str());
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (kPhysicsKeys.count(key)) {
            s.physics[key] = parse_double(value, key, line);
        } else if (key == "model") {
            if (value != "sg" && value != "jc")
                throw std::runtime_error("config: model must be 'sg' or 'jc'");
            s.model = value;
        } else if (key == "initial_state") {
            if (value != "gg1" && value != "eg0")
                throw std::runtime_error("config: initial_state must be 'gg1' or 'eg0'");
            s.initial_state = value;
        } else if (key == "t_start") {
            s.t_start = parse_double(value, key, line);
        } else if (key == "t_end") {
            s.t_end = parse_double(value, key, line);
        } else if (key == "steps") {
            s.steps = static_cast<int>(parse_double(value, key, line));
        } else if (key == "output") {
            s.output = value;
        } else if (key == "verify") {
            s.verify = parse_bool(value, key, line);
        } else if (key == "oracle_n") {
            s.oracle_n = static_cast<int>(parse_double(value, key, line));
        } else if (key == "svg") {
            s.svg = parse_bool(value, key, line);
        } else {
            std::ostringstream os;
            os << "config line " << line << ": unknown key '" << key << "'";
            throw std::runtime_error(os.str());
        }
    }
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

std::string render_svg(const std::string& title, const std::vector<double>& x,
                       const std::vector<Series>& series) {
    const int w = 860, h = 520;
    const int ml = 70, mr = 170, mt = 40, mb = 50;
    const double px = double(w - ml - mr), py = double(h - mt - mb);

    double xmin = x.front(), xmax = x.back();
    double ymin = 0.0, ymax = 0.0;
    for (const Series& s : series)
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax == ymin) ymax = ymin + 1.0;
    ymax *= 1.05;

    auto X = [&](double v) { return ml + px * (v - xmin) / (xmax - xmin); };
    auto Y = [&](double v) { return mt + py * (1.0 - (v - ymin) / (ymax - ymin)); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << title << "</text>\n";

    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        os << "<line x1=\"" << X(xv) << "\" y1=\"" << mt << "\" x2=\"" << X(xv) << "\" y2=\""
           << mt + py << "\" stroke=\"#dddddd\"/>\n"
           << "<line x1=\"" << ml << "\" y1=\"" << Y(yv) << "\" x2=\"" << ml + px << "\" y2=\""
           << Y(yv) << "\" stroke=\"#dddddd\"/>\n"
           << "<text x=\"" << X(xv) << "\" y=\"" << h - mb + 20
           << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xv) << "</text>\n"
           << "<text x=\"" << ml - 8 << "\" y=\"" << Y(yv) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(yv) << "</text>\n";
    }
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << px << "\" height=\"" << py
       << "\" fill=\"none\" stroke=\"black\"/>\n"
       << "<text x=\"" << ml + px / 2 << "\" y=\"" << h - 10
       << "\" text-anchor=\"middle\" font-size=\"13\">T (Rabi periods)</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = colors[s % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < x.size(); ++i)
            os << X(x[i]) << ',' << Y(series[s].y[i]) << ' ';
        os << "\"/>\n"
           << "<text x=\"" << ml + px + 12 << "\" y=\"" << mt + 18 + 18 * double(s)
           << "\" font-size=\"12\" fill=\"" << color << "\">" << series[s].label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::vector<double>> read_csv_columns(const std::string& path,
                                                  std::vector<std::string>& header) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open csv: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty csv: " + path);

    header.clear();
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);

    std::vector<std::vector<double>> cols(header.size());
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t c = 0;
        while (std::getline(ls, cell, ',') && c < cols.size()) cols[c++].push_back(std::stod(cell));
    }
    return cols;
}

} // namespace osgcli
