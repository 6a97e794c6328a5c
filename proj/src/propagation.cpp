#include "ionmirror/propagation.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Eigenvalues>

#include "ionmirror/errors.hpp"
#include "ionmirror/tolerances.hpp"

namespace ionmirror {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cd = std::complex<double>;

struct EigH {
    VectorXd values;
    MatrixXcd vectors;
};

EigH decompose(const MatrixXcd& m, const char* what)
{
    if (max_abs_entry(m - m.adjoint()) > tol::hermitian)
        throw NotHermitian(std::string(what) + " is not hermitian");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m);
    if (es.info() != Eigen::Success)
        throw EigFailure(std::string("eigensolve failed for ") + what);
    return {es.eigenvalues(), es.eigenvectors()};
}

VectorXcd advance(const EigH& eig, double t, const VectorXcd& psi)
{
    const VectorXcd c = eig.vectors.adjoint() * psi;
    const VectorXcd phases =
        (eig.values.array().cast<cd>() * cd(0.0, -t)).exp();
    return eig.vectors * phases.cwiseProduct(c);
}

void check_norm(const VectorXcd& amplitudes)
{
    if (std::abs(amplitudes.norm() - 1.0) > tol::norm_drift)
        throw UnitarityLost("norm drifted beyond tolerance during evolution");
}

void record_sample(EvolutionRecord& rec, double t, const StateVector& psi,
                   const RecordOptions& opts)
{
    append_standard_observables(rec, t, psi);
    if (opts.keep_states) rec.states.push_back(psi);
}

} // namespace

OperatorMatrix propagator(const OperatorMatrix& H, double t)
{
    if (!H.hermitian) throw NotHermitian("propagator requires a hermitian generator");
    const EigH eig = decompose(H.mat, "evolution generator");
    const VectorXcd phases =
        (eig.values.array().cast<cd>() * cd(0.0, -t)).exp();
    MatrixXcd u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    return make_operator(H.space, std::move(u), false);
}

StateVector evolve_const(const OperatorMatrix& H, double t, const StateVector& psi0)
{
    if (!(H.space == psi0.space))
        throw SpaceMismatch("generator and state live in different spaces");
    if (!H.hermitian) throw NotHermitian("evolution requires a hermitian generator");
    const EigH eig = decompose(H.mat, "evolution generator");
    StateVector out{psi0.space, advance(eig, t, psi0.amplitudes)};
    check_norm(out.amplitudes);
    return out;
}

EvolutionRecord evolve_const_record(const OperatorMatrix& H, double t0, double t1,
                                    double dt, const StateVector& psi0,
                                    const RecordOptions& opts)
{
    if (!(H.space == psi0.space))
        throw SpaceMismatch("generator and state live in different spaces");
    if (!H.hermitian) throw NotHermitian("evolution requires a hermitian generator");
    if (dt <= 0.0) throw InvalidParameter("sample spacing must be positive");
    if (t1 < t0) throw InvalidParameter("evolution interval is reversed");
    if (opts.stride < 1) throw InvalidParameter("record stride must be >= 1");

    const EigH eig = decompose(H.mat, "evolution generator");
    EvolutionRecord rec;
    const double span = t1 - t0;
    const long nsteps = static_cast<long>(std::ceil(span / dt - 1e-9));
    for (long k = 0; k <= nsteps; ++k) {
        const bool last = (k == nsteps);
        if (!last && k % opts.stride != 0) continue;
        const double t = last ? t1 : t0 + static_cast<double>(k) * dt;
        StateVector psi{psi0.space, advance(eig, t - t0, psi0.amplitudes)};
        check_norm(psi.amplitudes);
        record_sample(rec, t, psi, opts);
    }
    return rec;
}

double max_timedep_step(double max_frequency)
{
    if (max_frequency <= 0.0) return std::numeric_limits<double>::infinity();
    return (2.0 * M_PI / max_frequency) / 20.0;
}

EvolutionRecord evolve_timedep(const TimeDependentHamiltonian& H, double t0, double t1,
                               double dt, const StateVector& psi0,
                               const RecordOptions& opts)
{
    if (!(H.space == psi0.space))
        throw SpaceMismatch("generator and state live in different spaces");
    if (dt <= 0.0) throw InvalidParameter("step size must be positive");
    if (t1 < t0) throw InvalidParameter("evolution interval is reversed");
    if (opts.stride < 1) throw InvalidParameter("record stride must be >= 1");
    const double limit = max_timedep_step(H.max_frequency);
    if (dt > limit * (1.0 + 1e-12))
        throw StepTooLarge("step does not resolve the fastest retained oscillation");

    // Gauss-Legendre nodes and the fourth-order commutator-free weights.
    const double root3over6 = std::sqrt(3.0) / 6.0;
    const double wa = 0.25 + root3over6;
    const double wb = 0.25 - root3over6;

    EvolutionRecord rec;
    StateVector psi = psi0;
    record_sample(rec, t0, psi, opts);

    const long nsteps = static_cast<long>(std::ceil((t1 - t0) / dt - 1e-9));
    double t = t0;
    for (long k = 0; k < nsteps; ++k) {
        const double tnext = (k == nsteps - 1) ? t1 : t0 + static_cast<double>(k + 1) * dt;
        const double h = tnext - t;
        const Eigen::MatrixXcd h1 = H.eval(t + (0.5 - root3over6) * h);
        const Eigen::MatrixXcd h2 = H.eval(t + (0.5 + root3over6) * h);
        const EigH first = decompose(wa * h1 + wb * h2, "Magnus factor");
        psi.amplitudes = advance(first, h, psi.amplitudes);
        const EigH second = decompose(wb * h1 + wa * h2, "Magnus factor");
        psi.amplitudes = advance(second, h, psi.amplitudes);
        check_norm(psi.amplitudes);
        t = tnext;
        if ((k + 1) % opts.stride == 0 || k == nsteps - 1)
            record_sample(rec, t, psi, opts);
    }
    return rec;
}

} // namespace ionmirror
