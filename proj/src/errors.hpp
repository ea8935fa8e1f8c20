#pragma once

#include <stdexcept>
#include <string>

namespace osg {

// Violation of a documented numeric contract (non-Hermitian input where
// Hermitian is required, out-of-bounds index, inconsistent grids, ...).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A displaced packet no longer fits the sampling grid.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-validation check failed.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace osg
