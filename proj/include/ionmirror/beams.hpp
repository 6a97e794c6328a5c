#pragma once

#include "ionmirror/operators.hpp"

namespace ionmirror {

/// One effective travelling-wave drive after aux-level elimination: signed
/// real strength (rad/us), Lamb-Dicke parameter, mode direction, and the
/// order at which the vibronic ladder series is truncated.
struct BeamSpec {
    double strength = 0.0;
    double eta = 0.0;
    ModeSelector mode = ModeSelector::along(Axis::Z);
    int series_order = 8;
};

enum class CalibrationMode {
    /// Second beam cancels the carrier at leading order in eta^2:
    /// g2 (1 - eta2^2/2) = -g1 (1 - eta1^2/2).
    LeadingOrder,
    /// Second beam cancels the carrier exactly: g2 e^{-eta2^2/2} = -g1 e^{-eta1^2/2}.
    ExactCarrierCancel,
};

struct TwoBeamCalibration {
    double g2;       // strength of the balancing beam
    double g_parity; // leading-order coefficient of n sigma_x: -g1 (eta2^2 - eta1^2)
    CalibrationMode mode;

    double pulse_time() const; // pi / |g_parity|
};

/// Solve the carrier-cancellation constraint for the second beam. Requires
/// eta1 != eta2 (DegenerateEtas), both in [0, 1) (InvalidParameter), g1 != 0.
TwoBeamCalibration calibrate_two_beams(double g1, double eta1, double eta2,
                                       CalibrationMode mode = CalibrationMode::LeadingOrder);

const char* calibration_mode_name(CalibrationMode mode);
CalibrationMode calibration_mode_from_name(const std::string& name);

} // namespace ionmirror
