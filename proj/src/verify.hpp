#pragma once

// Self-check suite: closed-form overlaps against numerical quadrature, the
// assembled density matrices against the grid-evolved full state, and the
// closed-form partial-transpose spectrum against the numeric one.

#include <string>
#include <vector>

#include "wavepackets.hpp"

namespace osg {

struct VerifyCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    std::size_t grid_n = 16384;
    // Overrides the built-in tolerance of every check when positive.
    double tolerance_override = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<std::string> warnings;
    bool all_passed() const;
    std::string to_text() const;
};

VerifyReport run_verification(const PhysicalParams& params, const VerifyOptions& options = {});

} // namespace osg
