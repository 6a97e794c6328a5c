#include "ionmirror/beams.hpp"

#include <cmath>
#include <string>

#include "ionmirror/errors.hpp"

namespace ionmirror {

double TwoBeamCalibration::pulse_time() const
{
    return 3.14159265358979323846 / std::abs(g_parity);
}

TwoBeamCalibration calibrate_two_beams(double g1, double eta1, double eta2,
                                       CalibrationMode mode)
{
    if (g1 == 0.0)
        throw InvalidParameter("first beam strength must be nonzero");
    if (eta1 < 0.0 || eta1 >= 1.0 || eta2 < 0.0 || eta2 >= 1.0)
        throw InvalidParameter("Lamb-Dicke parameters must lie in [0, 1)");
    if (eta1 == eta2)
        throw DegenerateEtas("equal Lamb-Dicke parameters leave no linear-in-n term");

    double g2;
    switch (mode) {
    case CalibrationMode::LeadingOrder:
        g2 = -g1 * (1.0 - eta1 * eta1 / 2.0) / (1.0 - eta2 * eta2 / 2.0);
        break;
    case CalibrationMode::ExactCarrierCancel:
        g2 = -g1 * std::exp(-eta1 * eta1 / 2.0) / std::exp(-eta2 * eta2 / 2.0);
        break;
    default:
        throw InvalidParameter("unknown calibration mode");
    }
    double g_parity = -g1 * (eta2 * eta2 - eta1 * eta1);
    return {g2, g_parity, mode};
}

const char* calibration_mode_name(CalibrationMode mode)
{
    switch (mode) {
    case CalibrationMode::LeadingOrder: return "leading-order";
    case CalibrationMode::ExactCarrierCancel: return "exact-carrier-cancel";
    }
    return "?";
}

CalibrationMode calibration_mode_from_name(const std::string& name)
{
    if (name == "leading-order") return CalibrationMode::LeadingOrder;
    if (name == "exact-carrier-cancel") return CalibrationMode::ExactCarrierCancel;
    throw ConfigError("unknown calibration mode '" + name + "'");
}

} // namespace ionmirror
