#pragma once

// Deterministic CSV emission: comma separator, scientific notation with 17
// significant digits, LF endings, no timestamps. Run metadata goes to a
// sidecar .meta file so the data files are byte-stable across runs.

#include <string>
#include <vector>

#include "sweep.hpp"

namespace osg {

std::string format_double(double v);   // %.16e

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string figure1_csv(const std::vector<Figure1Row>& rows);

// Config echo for the .meta sidecar.
std::string meta_text(const PhysicalParams& params, const std::string& model,
                      const std::string& initial, const SweepGrid& grid);

void write_file(const std::string& path, const std::string& content);

} // namespace osg
