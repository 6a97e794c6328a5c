#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ionmirror/axes.hpp"

namespace ionmirror {

/// Physical inputs of the driven three-level (Lambda) configuration: two
/// lasers a and b couple |g>-|aux> and |e>-|aux| with strengths g_a, g_b.
/// Frequencies are angular, rad/us; wavevectors are physical, rad/m; the
/// mass is in kg (the only places SI enters are the Lamb-Dicke factors).
struct RamanParams {
    double omega0 = 0.0;      // trap frequency, common to all axes
    double omega_g = 0.0;     // electronic level frequencies
    double omega_e = 0.0;
    double omega_aux = 0.0;
    double omega_a = 0.0;     // laser frequencies
    double omega_b = 0.0;
    std::complex<double> g_a{0.0, 0.0};
    std::complex<double> g_b{0.0, 0.0};
    Eigen::Vector3d k_a = Eigen::Vector3d::Zero(); // rad/m
    Eigen::Vector3d k_b = Eigen::Vector3d::Zero();
    double ion_mass_kg = 0.0;

    /// Detuning of laser a from the g-aux transition: omega_a - (omega_aux - omega_g).
    double detuning_a() const { return omega_a - (omega_aux - omega_g); }
    /// Detuning of laser b from the e-aux transition: omega_b - (omega_aux - omega_e).
    double detuning_b() const { return omega_b - (omega_aux - omega_e); }
    /// Atomic splitting omega_e - omega_g.
    double omega_atomic() const { return omega_e - omega_g; }
};

/// The elimination of |aux> is controlled by three ratios per laser: detuning
/// against both coupling strengths and against the detuning difference.
struct ValidityReport {
    double det_a_over_ga;
    double det_a_over_gb;
    double det_a_over_diff;
    double det_b_over_ga;
    double det_b_over_gb;
    double det_b_over_diff;

    double min_ratio() const;
    bool ok(double threshold = 10.0) const { return min_ratio() >= threshold; }
};

ValidityReport validity_report(const RamanParams& p);

/// Outputs of adiabatically eliminating |aux>: light-shifted level
/// frequencies, the second-order coupling, and the composite drive. The
/// denominators D_a = (omega_aux - omega_g) - omega_a and D_b analogous count
/// transition minus laser, so a red-detuned drive has D > 0.
struct EffectiveParams {
    double omega_g_shifted;   // omega_g - 2|g_a|^2 / D_a
    double omega_e_shifted;   // omega_e - 2|g_b|^2 / D_b
    double omega_aux_shifted; // omega_aux + |g_a|^2/D_a + |g_b|^2/D_b
    std::complex<double> g_eff; // g_a g_b^* (1/D_a + 1/D_b)
    Eigen::Vector3d k_L;      // k_a - k_b
    double omega_L;           // omega_a - omega_b
    double eta_L;             // Lamb-Dicke parameter of k_L

    /// Stark-shifted atomic splitting; the composite drive is resonant when
    /// omega_L equals this.
    double omega_atomic_shifted() const { return omega_e_shifted - omega_g_shifted; }
};

/// Second-order elimination of the aux level. Throws ZeroDetuning when either
/// laser sits on its bare resonance and InvalidParameter on omega0 <= 0 or a
/// non-positive mass with a nonzero k_L.
EffectiveParams derive_effective(const RamanParams& p);

/// eta = sqrt(hbar / (2 M omega0)) |k| with omega0 in rad/us and k in rad/m.
double lamb_dicke_parameter(double k_magnitude, double mass_kg, double omega0);

/// Wavevector along `axis` whose Lamb-Dicke parameter is exactly eta.
Eigen::Vector3d wavevector_for_eta(double eta, Axis axis, double mass_kg, double omega0);

/// Per-axis Lamb-Dicke components eta_j = sqrt(hbar/(2 M omega0)) k_j.
std::array<double, 3> lamb_dicke_components(const Eigen::Vector3d& k, double mass_kg,
                                            double omega0);

/// Desk-scale factory: symmetric drive (g_a = g_b = g) with both lasers
/// red-detuned by delta from their transitions, which keeps the pair on
/// two-photon resonance. Laser a carries a wavevector along `axis` with
/// Lamb-Dicke parameter eta_a and laser b runs plane (k_b = 0), so the
/// composite drive inherits eta_L = eta_a. Level frequencies are placed at
/// omega_g = 0, omega_e = omega_atomic, omega_aux as given.
RamanParams make_symmetric_raman(double g, double delta, double omega0, double eta_a,
                                 Axis axis, double omega_atomic = 50.0,
                                 double omega_aux = 1000.0);

} // namespace ionmirror
