#include "ionmirror/gates.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "ionmirror/errors.hpp"
#include "ionmirror/observables.hpp"
#include "ionmirror/tolerances.hpp"

namespace ionmirror {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cd = std::complex<double>;

// One eigendecomposition, many sample times.
struct Sampler {
    Eigen::VectorXd values;
    MatrixXcd vectors;

    explicit Sampler(const OperatorMatrix& H)
    {
        if (!H.hermitian) throw NotHermitian("sampler requires a hermitian generator");
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H.mat);
        if (es.info() != Eigen::Success) throw EigFailure("generator eigensolve failed");
        values = es.eigenvalues();
        vectors = es.eigenvectors();
    }

    VectorXcd at(double t, const VectorXcd& coeffs) const
    {
        const VectorXcd phases = (values.array().cast<cd>() * cd(0.0, -t)).exp();
        return vectors * phases.cwiseProduct(coeffs);
    }

    VectorXcd coefficients(const VectorXcd& psi) const { return vectors.adjoint() * psi; }
};

} // namespace

GateReport parity_gate_fidelity(const OperatorMatrix& H_realized, double g_nominal,
                                Axis axis, const std::vector<Probe>& probes)
{
    if (g_nominal == 0.0) throw InvalidParameter("nominal strength must be nonzero");
    if (probes.empty()) throw InvalidParameter("probe list is empty");

    GateReport report;
    report.g_nominal = g_nominal;
    report.pulse_time = M_PI / std::abs(g_nominal);

    const OperatorMatrix mirror = reflection_operator(H_realized.space, axis);
    const Sampler sampler(H_realized);
    const int boundary = H_realized.space.cutoff(axis) - 2;

    report.worst_fidelity = 1.0;
    report.min_ground_population = 1.0;
    report.min_purity = 1.0;
    double fidelity_sum = 0.0;

    for (const Probe& probe : probes) {
        if (!(probe.state.space == H_realized.space))
            throw SpaceMismatch("probe and generator live in different spaces");
        if (level_population(probe.state, Level::Ground) < 1.0 - 1e-12)
            throw ProbeNotGround("probe " + probe.name + " must start in |g>");
        if (max_occupied_level(probe.state, axis) >= boundary)
            throw ProbeNotGround("probe " + probe.name
                                 + " occupies the top two Fock levels of the gate axis");

        StateVector evolved{probe.state.space,
                            sampler.at(report.pulse_time,
                                       sampler.coefficients(probe.state.amplitudes))};
        const StateVector target = apply(mirror, probe.state);

        ProbeResult result;
        result.name = probe.name;
        result.fidelity = fidelity(target, evolved);
        result.ground_population = level_population(evolved, Level::Ground);
        result.purity = reduced_electronic_purity(evolved);
        report.worst_fidelity = std::min(report.worst_fidelity, result.fidelity);
        report.min_ground_population =
            std::min(report.min_ground_population, result.ground_population);
        report.min_purity = std::min(report.min_purity, result.purity);
        fidelity_sum += result.fidelity;
        report.probes.push_back(std::move(result));
    }
    report.average_fidelity = fidelity_sum / static_cast<double>(report.probes.size());
    return report;
}

PulseOptimum optimize_pulse_time(const OperatorMatrix& H_realized, double g_nominal,
                                 Axis axis, const std::vector<Probe>& probes)
{
    if (g_nominal == 0.0) throw InvalidParameter("nominal strength must be nonzero");
    if (probes.empty()) throw InvalidParameter("probe list is empty");

    const OperatorMatrix mirror = reflection_operator(H_realized.space, axis);
    const Sampler sampler(H_realized);

    std::vector<VectorXcd> coeffs, targets;
    coeffs.reserve(probes.size());
    targets.reserve(probes.size());
    for (const Probe& probe : probes) {
        if (!(probe.state.space == H_realized.space))
            throw SpaceMismatch("probe and generator live in different spaces");
        coeffs.push_back(sampler.coefficients(probe.state.amplitudes));
        targets.push_back(mirror.mat * probe.state.amplitudes);
    }
    const auto worst_at = [&](double t) {
        double worst = 1.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            worst = std::min(worst, std::norm(targets[k].dot(sampler.at(t, coeffs[k]))));
        return worst;
    };

    PulseOptimum opt;
    opt.nominal_time = M_PI / std::abs(g_nominal);
    opt.worst_fidelity_nominal = worst_at(opt.nominal_time);

    double lo = 0.9 * opt.nominal_time, hi = 1.1 * opt.nominal_time;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double t1 = hi - inv_phi * (hi - lo);
    double t2 = lo + inv_phi * (hi - lo);
    double f1 = worst_at(t1), f2 = worst_at(t2);
    while (hi - lo > 1e-9 * opt.nominal_time) {
        if (f1 < f2) {
            lo = t1;
            t1 = t2;
            f1 = f2;
            t2 = lo + inv_phi * (hi - lo);
            f2 = worst_at(t2);
        } else {
            hi = t2;
            t2 = t1;
            f2 = f1;
            t1 = hi - inv_phi * (hi - lo);
            f1 = worst_at(t1);
        }
    }
    opt.optimal_time = 0.5 * (lo + hi);
    opt.worst_fidelity_optimal = worst_at(opt.optimal_time);
    // never report a refinement below the starting point
    if (opt.worst_fidelity_optimal < opt.worst_fidelity_nominal) {
        opt.optimal_time = opt.nominal_time;
        opt.worst_fidelity_optimal = opt.worst_fidelity_nominal;
    }
    return opt;
}

NotGateReport not_gate_check(const StateVector& phi_even, const StateVector& phi_odd,
                             const OperatorMatrix& gate, Axis axis)
{
    if (!(phi_even.space == phi_odd.space) || !(phi_even.space == gate.space))
        throw SpaceMismatch("NOT-gate inputs live in different spaces");

    const OperatorMatrix mirror = reflection_operator(gate.space, axis);
    const auto check_eigen = [&](const StateVector& phi, double sign, const char* which) {
        const VectorXcd residual = mirror.mat * phi.amplitudes - sign * phi.amplitudes;
        if (residual.cwiseAbs().maxCoeff() > tol::parity_eigen)
            throw NotParityEigenstate(std::string(which)
                                      + " input is not a reflection eigenstate");
    };
    check_eigen(phi_even, +1.0, "even");
    check_eigen(phi_odd, -1.0, "odd");

    const cd half{std::sqrt(0.5), 0.0};
    const StateVector plus = superposition({{half, phi_even}, {half, phi_odd}});
    const StateVector minus = superposition({{half, phi_even}, {-half, phi_odd}});

    const StateVector gate_plus = apply(gate, plus);
    const StateVector gate_minus = apply(gate, minus);
    const StateVector gate_twice = apply(gate, gate_plus);

    NotGateReport report;
    report.fidelity_plus_to_minus = fidelity(minus, gate_plus);
    report.fidelity_minus_to_plus = fidelity(plus, gate_minus);
    report.return_fidelity = fidelity(plus, gate_twice);
    return report;
}

TimeReversalReport time_reversal_check(const OperatorMatrix& H, double t, Axis axis,
                                       const StateVector& psi0)
{
    if (!(H.space == psi0.space))
        throw SpaceMismatch("generator and state live in different spaces");
    const OperatorMatrix mirror = reflection_operator(H.space, axis);

    TimeReversalReport report;
    report.anticommutator_norm = max_abs_entry(mirror.mat * H.mat + H.mat * mirror.mat);
    if (report.anticommutator_norm > tol::anticommutator)
        throw AnticommutationFailure(
            "generator does not anticommute with the reflection");

    const Sampler sampler(H);
    const auto evolve = [&](double time, const VectorXcd& psi) {
        return sampler.at(time, sampler.coefficients(psi));
    };

    const MatrixXcd u = propagator(H, t).mat;
    const MatrixXcd round_trip = mirror.mat * u * mirror.mat * u;
    report.identity_error =
        max_abs_entry(round_trip - MatrixXcd::Identity(u.rows(), u.cols()));
    report.recovery_fidelity =
        std::norm(psi0.amplitudes.dot(round_trip * psi0.amplitudes));

    // Symmetric echo: drive t/2, mirror, drive t, mirror, drive t/2.
    VectorXcd psi = evolve(0.5 * t, psi0.amplitudes);
    psi = mirror.mat * psi;
    psi = evolve(t, psi);
    psi = mirror.mat * psi;
    psi = evolve(0.5 * t, psi);
    report.three_pulse_fidelity = std::norm(psi0.amplitudes.dot(psi));
    return report;
}

AdiabaticReport adiabatic_elimination_check(const RamanParams& params,
                                            const SpaceDescriptor& space,
                                            const StateVector& psi0, double t_final,
                                            double sample_dt, int fine_periods,
                                            int fine_samples_per_period)
{
    if (space.electronic_dim != 3)
        throw WrongElectronicDim("adiabatic check needs the three-level space");
    if (!(psi0.space == space))
        throw SpaceMismatch("probe state lives in a different space");
    if (t_final <= 0.0 || sample_dt <= 0.0)
        throw InvalidParameter("adiabatic check needs positive t_final and sample_dt");
    if (fine_periods < 1 || fine_samples_per_period < 1)
        throw InvalidParameter("fine sampling parameters must be >= 1");
    if (level_population(psi0, Level::Aux) > 1e-12)
        throw InvalidParameter("probe state must start with an empty aux level");

    AdiabaticReport report;
    report.ratio = validity_report(params).min_ratio();
    if (report.ratio < 10.0)
        throw RatioTooSmall("detuning does not dominate the couplings");

    const double min_det =
        std::min(std::abs(params.detuning_a()), std::abs(params.detuning_b()));
    report.envelope = 16.0 * (std::norm(params.g_a) + std::norm(params.g_b))
                      / (min_det * min_det);
    report.t_final = t_final;

    const OperatorMatrix h_full = full_lambda_hamiltonian(params, space);
    const OperatorMatrix h_eff = effective_hamiltonian(params, space);
    const Sampler full(h_full);
    const Sampler eff(h_eff);
    const VectorXcd c_full = full.coefficients(psi0.amplitudes);

    const int v = space.vib_dim();
    const auto aux_population = [&](double t) {
        const VectorXcd psi = full.at(t, c_full);
        return psi.segment(2 * v, v).squaredNorm();
    };

    // Fine grid: the aux population breathes at the detuning frequency, so an
    // initial window is sampled densely enough to catch the peaks.
    const double period = 2.0 * M_PI / min_det;
    report.fine_window = std::min(t_final, fine_periods * period);
    const double fine_dt = period / fine_samples_per_period;

    double max_aux = 0.0;
    int fine_samples = 0;
    for (double t = 0.0; t <= report.fine_window * (1.0 + 1e-12); t += fine_dt) {
        max_aux = std::max(max_aux, aux_population(t));
        ++fine_samples;
    }
    int coarse_samples = 0;
    for (double t = 0.0; t <= t_final * (1.0 + 1e-12); t += sample_dt) {
        max_aux = std::max(max_aux, aux_population(t));
        ++coarse_samples;
    }
    max_aux = std::max(max_aux, aux_population(t_final));
    report.max_aux_population = max_aux;
    report.fine_samples = fine_samples;
    report.coarse_samples = coarse_samples;

    const StateVector end_full{space, full.at(t_final, c_full)};
    const StateVector end_eff{space, eff.at(t_final, eff.coefficients(psi0.amplitudes))};
    report.end_fidelity = fidelity(end_full, end_eff);
    return report;
}

} // namespace ionmirror
