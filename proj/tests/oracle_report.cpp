// Computes the regression constants that the acceptance suite freezes:
// worst-case two-beam infidelities (analytic per-level closed form checked
// against the realized gate), their eta scaling slope, and the adiabatic
// elimination bounds. Run once, paste the printed values into
// golden_values.hpp, and keep the tolerances stated there.
#include <cmath>
#include <cstdio>
#include <vector>

#include "ionmirror/beams.hpp"
#include "ionmirror/gates.hpp"
#include "ionmirror/hamiltonians.hpp"
#include "ionmirror/probes.hpp"
#include "ionmirror/state.hpp"
#include "oracles.hpp"

using namespace ionmirror;

namespace {

struct PairResult {
    double eta1, eta2;
    double worst_infidelity_oracle;
    double worst_infidelity_realized;
    double vacuum_infidelity;
};

PairResult evaluate_pair(double g1, double eta1, double eta2)
{
    const auto space = make_space(2, {{Axis::Z, 32}});
    const auto cal = calibrate_two_beams(g1, eta1, eta2);
    const auto along_z = ModeSelector::along(Axis::Z);
    const auto h = two_beam_hamiltonian(BeamSpec{g1, eta1, along_z, 8},
                                        BeamSpec{cal.g2, eta2, along_z, 8}, space);
    const auto probes = build_probe_suite(space, Axis::Z, restricted_probe_suite(4));
    const double t = M_PI / std::abs(cal.g_parity);
    const int v = space.vib_dim();

    PairResult r{eta1, eta2, 0.0, 0.0, 0.0};
    for (const auto& probe : probes) {
        const Eigen::VectorXcd c = probe.state.amplitudes.head(v);
        const double fid = oracle::two_beam_probe_fidelity(c, g1, eta1, cal.g2, eta2, t);
        r.worst_infidelity_oracle = std::max(r.worst_infidelity_oracle, 1.0 - fid);
        if (probe.name == "fock_0") r.vacuum_infidelity = 1.0 - fid;
    }
    const auto report = parity_gate_fidelity(h, cal.g_parity, Axis::Z, probes);
    r.worst_infidelity_realized = 1.0 - report.worst_fidelity;
    return r;
}

} // namespace

int main()
{
    const double g1 = 3.0;

    std::printf("two-beam calibration at g1 = %.17g, eta = (0.2, 0.3):\n", g1);
    const auto cal = calibrate_two_beams(g1, 0.2, 0.3);
    std::printf("  g2          = %.17g\n", cal.g2);
    std::printf("  g_parity    = %.17g\n", cal.g_parity);
    std::printf("  pulse_time  = %.17g\n", cal.pulse_time());

    std::printf("\nworst-case infidelity, probe suite restricted to n <= 4:\n");
    const std::vector<double> etas{0.05, 0.1, 0.2, 0.3};
    std::vector<PairResult> results;
    for (double eta : etas) results.push_back(evaluate_pair(g1, 2.0 * eta / 3.0, eta));
    for (const auto& r : results) {
        std::printf("  eta = (%.17g, %.17g)\n", r.eta1, r.eta2);
        std::printf("    oracle    = %.12e\n", r.worst_infidelity_oracle);
        std::printf("    realized  = %.12e\n", r.worst_infidelity_realized);
        std::printf("    |diff|    = %.3e\n",
                    std::abs(r.worst_infidelity_oracle - r.worst_infidelity_realized));
        std::printf("    vacuum    = %.12e\n", r.vacuum_infidelity);
    }

    // least-squares slope of ln(infidelity) against ln(eta)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : results) {
        const double x = std::log(r.eta2), y = std::log(r.worst_infidelity_oracle);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(results.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::printf("  log-log slope = %.12g\n", slope);

    std::printf("\nadiabatic elimination, coherent alpha=1 probe, cutoff 12:\n");
    {
        const auto space = make_space(3, {{Axis::Z, 12}});
        const auto psi0 = coherent_state(space, Axis::Z, 1.0);

        // tracking-fidelity decay over the window: the second-order coupling
        // overshoots the dressed gap by 2x, so the mismatch phase grows
        // linearly in t and only short windows track tightly
        const auto p1 = make_symmetric_raman(1.0, 100.0, 10.0, 0.2, Axis::Z);
        std::printf("  ratio 100 window sweep:\n");
        for (double tf : {5.0, 10.0, 20.0, 40.0}) {
            const auto r = adiabatic_elimination_check(p1, space, psi0, tf, 0.5);
            std::printf("    t_final %5.1f: end_fidelity = %.12f  max_aux = %.12e\n",
                        tf, r.end_fidelity, r.max_aux_population);
        }
        const auto r1 = adiabatic_elimination_check(p1, space, psi0, 10.0, 0.5);
        std::printf("  ratio 100, t_final = 10 (ten coupling times):\n");
        std::printf("    envelope          = %.12e\n", r1.envelope);
        std::printf("    max_aux           = %.12e\n", r1.max_aux_population);
        std::printf("    end_fidelity      = %.12f\n", r1.end_fidelity);

        const auto p2 = make_symmetric_raman(1.0, 4000.0, 10.0, 0.2, Axis::Z);
        const auto r2 = adiabatic_elimination_check(p2, space, psi0, 10.0, 0.5);
        std::printf("  ratio 4000, t_final = 10:\n");
        std::printf("    envelope          = %.12e\n", r2.envelope);
        std::printf("    max_aux           = %.12e\n", r2.max_aux_population);
        std::printf("    end_fidelity      = %.12f\n", r2.end_fidelity);
    }
    return 0;
}
