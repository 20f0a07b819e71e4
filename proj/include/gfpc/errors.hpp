#pragma once

#include <stdexcept>
#include <string>

namespace gfpc {

/// Thrown when a predictor stage or solver state stops being finite.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, int step, int stage)
        : std::runtime_error(what), step_(step), stage_(stage) {}
    int step() const { return step_; }
    int stage() const { return stage_; }

private:
    int step_;
    int stage_;
};

/// Thrown when the energy corrector cannot bracket a root of D(eta).
class CorrectorFailure : public std::runtime_error {
public:
    explicit CorrectorFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gfpc
