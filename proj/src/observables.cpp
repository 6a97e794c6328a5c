#include "ionmirror/observables.hpp"

#include "ionmirror/errors.hpp"

namespace ionmirror {

std::complex<double> overlap(const StateVector& a, const StateVector& b)
{
    if (!(a.space == b.space)) throw SpaceMismatch("overlap of states from different spaces");
    return a.amplitudes.dot(b.amplitudes); // Eigen's dot conjugates the left factor
}

double fidelity(const StateVector& a, const StateVector& b)
{
    return std::norm(overlap(a, b));
}

std::vector<double> electronic_populations(const StateVector& psi)
{
    const int v = psi.space.vib_dim();
    std::vector<double> pops(static_cast<size_t>(psi.space.electronic_dim));
    for (int l = 0; l < psi.space.electronic_dim; ++l)
        pops[static_cast<size_t>(l)] = psi.amplitudes.segment(l * v, v).squaredNorm();
    return pops;
}

double level_population(const StateVector& psi, Level level)
{
    const int l = level_index(level);
    if (l >= psi.space.electronic_dim)
        throw UnknownLevel(std::string(level_name(level)) + " not present in this space");
    const int v = psi.space.vib_dim();
    return psi.amplitudes.segment(l * v, v).squaredNorm();
}

double reduced_electronic_purity(const StateVector& psi)
{
    const int e = psi.space.electronic_dim;
    const int v = psi.space.vib_dim();
    Eigen::MatrixXcd rho(e, e);
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < e; ++c)
            rho(r, c) = psi.amplitudes.segment(r * v, v)
                            .dot(psi.amplitudes.segment(c * v, v));
    // rho(r, c) = <row block | col block> = (rho_e)_{c r}; purity is basis and
    // transpose invariant, so the ordering does not matter.
    return (rho * rho).trace().real();
}

double mean_occupation(const StateVector& psi, Axis axis)
{
    const int ai = axis_index(axis);
    if (!psi.space.has_axis(axis))
        throw MissingAxis(std::string("no axis ") + axis_name(axis) + " in this space");
    double sum = 0.0;
    for (int idx = 0; idx < psi.amplitudes.size(); ++idx) {
        const double w = std::norm(psi.amplitudes(idx));
        if (w == 0.0) continue;
        sum += w * psi.space.unpack(idx).occ[ai];
    }
    return sum;
}

double expectation(const OperatorMatrix& H, const StateVector& psi)
{
    if (!(H.space == psi.space)) throw SpaceMismatch("operator and state live in different spaces");
    if (!H.hermitian) throw NotHermitian("expectation requires a hermitian operator");
    return psi.amplitudes.dot(H.mat * psi.amplitudes).real();
}

} // namespace ionmirror
