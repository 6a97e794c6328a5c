#include "ionmirror/state.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "ionmirror/errors.hpp"
#include "ionmirror/rng.hpp"
#include "ionmirror/tolerances.hpp"

namespace ionmirror {

namespace {

StateVector finish(const SpaceDescriptor& space, Eigen::VectorXcd amps)
{
    double n = amps.norm();
    if (n < 1e-12)
        throw NormZero("state construction produced a (near) zero vector");
    amps /= n;
    return {space, std::move(amps)};
}

} // namespace

StateVector fock_state(const SpaceDescriptor& space, Level level,
                       std::initializer_list<std::pair<Axis, int>> occupation)
{
    std::array<int, 3> occ{0, 0, 0};
    for (auto [axis, n] : occupation)
        occ[axis_index(axis)] = n;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.total_dim());
    amps[space.index_of(level, occ)] = 1.0;
    return {space, std::move(amps)};
}

double coherent_truncation_deficit(std::complex<double> alpha, int cutoff)
{
    double nbar = std::norm(alpha);
    double term = std::exp(-nbar); // Poisson weight at n = 0
    double kept = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        kept += term;
        term *= nbar / (n + 1);
    }
    return 1.0 - kept;
}

StateVector coherent_state(const SpaceDescriptor& space, Axis axis,
                           std::complex<double> alpha, Level level)
{
    int N = space.cutoff(axis);
    double nbar = std::norm(alpha);
    if (nbar > 0 && nbar + 5.0 * std::sqrt(nbar) > N - 1)
        std::cerr << "[ionmirror] coherent state |alpha|^2 = " << nbar
                  << " crowds the axis cutoff " << N << " (discarded tail "
                  << coherent_truncation_deficit(alpha, N) << ")\n";

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.total_dim());
    std::complex<double> c = std::exp(-0.5 * nbar); // alpha^n / sqrt(n!) accumulates
    std::array<int, 3> occ{0, 0, 0};
    for (int n = 0; n < N; ++n) {
        occ[axis_index(axis)] = n;
        amps[space.index_of(level, occ)] = c;
        c *= alpha / std::sqrt(double(n + 1));
    }
    return finish(space, std::move(amps));
}

StateVector cat_state(const SpaceDescriptor& space, Axis axis, double alpha, int sign,
                      Level level)
{
    if (sign != 1 && sign != -1)
        throw InvalidParameter("cat sign must be +1 or -1");
    StateVector plus = coherent_state(space, axis, alpha, level);
    StateVector minus = coherent_state(space, axis, -alpha, level);
    return superposition({{1.0, plus}, {double(sign), minus}});
}

StateVector random_state(const SpaceDescriptor& space, std::uint64_t seed)
{
    GaussianSource g(seed);
    Eigen::VectorXcd amps(space.total_dim());
    for (int i = 0; i < amps.size(); ++i) {
        double re = g.next();
        double im = g.next();
        amps[i] = {re, im};
    }
    return finish(space, std::move(amps));
}

StateVector random_vibrational_state(const SpaceDescriptor& space, Axis axis, int max_n,
                                     std::uint64_t seed, Level level)
{
    int N = space.cutoff(axis);
    if (max_n < 0 || max_n >= N)
        throw CutoffExceeded("random state support 0.." + std::to_string(max_n) +
                             " outside axis cutoff " + std::to_string(N));
    GaussianSource g(seed);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.total_dim());
    std::array<int, 3> occ{0, 0, 0};
    for (int n = 0; n <= max_n; ++n) {
        occ[axis_index(axis)] = n;
        double re = g.next();
        double im = g.next();
        amps[space.index_of(level, occ)] = {re, im};
    }
    return finish(space, std::move(amps));
}

StateVector superposition(const std::vector<std::pair<std::complex<double>, StateVector>>& terms)
{
    if (terms.empty())
        throw NormZero("superposition of nothing");
    const SpaceDescriptor& space = terms.front().second.space;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.total_dim());
    for (const auto& [coeff, state] : terms) {
        if (!(state.space == space))
            throw SpaceMismatch("superposition terms live on different spaces");
        amps += coeff * state.amplitudes;
    }
    return finish(space, std::move(amps));
}

StateVector truncate_above(const StateVector& state, Axis axis, int max_n)
{
    int i = axis_index(axis);
    state.space.cutoff(axis); // throws if absent
    Eigen::VectorXcd amps = state.amplitudes;
    for (int k = 0; k < amps.size(); ++k)
        if (state.space.unpack(k).occ[i] > max_n) amps[k] = 0.0;
    return finish(state.space, std::move(amps));
}

int max_occupied_level(const StateVector& state, Axis axis, double population_floor)
{
    int i = axis_index(axis);
    state.space.cutoff(axis);
    std::vector<double> pop(state.space.cutoffs[i], 0.0);
    for (int k = 0; k < state.amplitudes.size(); ++k)
        pop[state.space.unpack(k).occ[i]] += std::norm(state.amplitudes[k]);
    for (int n = int(pop.size()) - 1; n >= 0; --n)
        if (pop[n] > population_floor) return n;
    return -1;
}

} // namespace ionmirror
