#include "ionmirror/raman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ionmirror/errors.hpp"
#include "ionmirror/units.hpp"

namespace ionmirror {

namespace {

double ratio_or_inf(double num, double den)
{
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

} // namespace

double ValidityReport::min_ratio() const
{
    return std::min({det_a_over_ga, det_a_over_gb, det_a_over_diff,
                     det_b_over_ga, det_b_over_gb, det_b_over_diff});
}

ValidityReport validity_report(const RamanParams& p)
{
    double da = std::abs(p.detuning_a());
    double db = std::abs(p.detuning_b());
    double ga = std::abs(p.g_a);
    double gb = std::abs(p.g_b);
    double diff = std::abs(p.detuning_a() - p.detuning_b());
    return {ratio_or_inf(da, ga), ratio_or_inf(da, gb), ratio_or_inf(da, diff),
            ratio_or_inf(db, ga), ratio_or_inf(db, gb), ratio_or_inf(db, diff)};
}

double lamb_dicke_parameter(double k_magnitude, double mass_kg, double omega0)
{
    if (mass_kg <= 0.0)
        throw InvalidParameter("ion mass must be positive");
    if (omega0 <= 0.0)
        throw InvalidParameter("trap frequency must be positive");
    double x0 = std::sqrt(units::hbar_si / (2.0 * mass_kg * units::to_rad_per_s(omega0)));
    return x0 * k_magnitude;
}

Eigen::Vector3d wavevector_for_eta(double eta, Axis axis, double mass_kg, double omega0)
{
    Eigen::Vector3d k = Eigen::Vector3d::Zero();
    if (eta == 0.0) return k;
    double unit_eta = lamb_dicke_parameter(1.0, mass_kg, omega0);
    k[axis_index(axis)] = eta / unit_eta;
    return k;
}

std::array<double, 3> lamb_dicke_components(const Eigen::Vector3d& k, double mass_kg,
                                            double omega0)
{
    std::array<double, 3> out{0.0, 0.0, 0.0};
    if (k.isZero()) return out;
    double unit_eta = lamb_dicke_parameter(1.0, mass_kg, omega0);
    for (int i = 0; i < 3; ++i)
        out[i] = unit_eta * k[i];
    return out;
}

EffectiveParams derive_effective(const RamanParams& p)
{
    // Elimination denominators count transition minus laser: a drive below its
    // transition (red) gives a positive denominator, and both dressed levels
    // shift down, the standard light-shift sign.
    double da = -p.detuning_a();
    double db = -p.detuning_b();
    if (da == 0.0 || db == 0.0)
        throw ZeroDetuning("adiabatic elimination needs nonzero detunings");

    double sa = std::norm(p.g_a) / da; // |g_a|^2 / D_a
    double sb = std::norm(p.g_b) / db;

    EffectiveParams e;
    e.omega_g_shifted = p.omega_g - 2.0 * sa;
    e.omega_e_shifted = p.omega_e - 2.0 * sb;
    e.omega_aux_shifted = p.omega_aux + sa + sb;
    e.g_eff = p.g_a * std::conj(p.g_b) * (1.0 / da + 1.0 / db);
    e.k_L = p.k_a - p.k_b;
    e.omega_L = p.omega_a - p.omega_b;
    e.eta_L = e.k_L.isZero() ? 0.0
                             : lamb_dicke_parameter(e.k_L.norm(), p.ion_mass_kg, p.omega0);
    return e;
}

RamanParams make_symmetric_raman(double g, double delta, double omega0, double eta_a,
                                 Axis axis, double omega_atomic, double omega_aux)
{
    RamanParams p;
    p.omega0 = omega0;
    p.omega_g = 0.0;
    p.omega_e = omega_atomic;
    p.omega_aux = omega_aux;
    // equal red detunings: both lasers sit delta below their transitions,
    // (omega_aux - 0) - omega_a = (omega_aux - omega_e) - omega_b = delta,
    // which keeps the pair on two-photon resonance
    p.omega_a = omega_aux - delta;
    p.omega_b = omega_aux - omega_atomic - delta;
    p.g_a = g;
    p.g_b = g;
    p.ion_mass_kg = units::beryllium9_mass_kg;
    p.k_a = wavevector_for_eta(eta_a, axis, p.ion_mass_kg, omega0);
    p.k_b = Eigen::Vector3d::Zero();
    return p;
}

} // namespace ionmirror
