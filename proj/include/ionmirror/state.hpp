#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ionmirror/space.hpp"

namespace ionmirror {

/// Normalized pure state on a composite space. Builders return unit vectors;
/// nothing downstream renormalizes silently.
struct StateVector {
    SpaceDescriptor space;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

/// |level; occupation> with every unlisted axis in its ground state.
StateVector fock_state(const SpaceDescriptor& space, Level level,
                       std::initializer_list<std::pair<Axis, int>> occupation = {});

/// Truncated coherent state along one axis (other axes ground). Amplitudes
/// are the usual e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized after the
/// cutoff; warns on stderr when <n> + 5 sqrt(<n>) crowds the cutoff.
StateVector coherent_state(const SpaceDescriptor& space, Axis axis,
                           std::complex<double> alpha, Level level = Level::Ground);

/// Weight of the discarded Poisson tail sum_{n >= cutoff} e^{-|a|^2}|a|^{2n}/n!.
double coherent_truncation_deficit(std::complex<double> alpha, int cutoff);

/// Even (sign=+1) or odd (sign=-1) superposition of |alpha> and |-alpha>.
StateVector cat_state(const SpaceDescriptor& space, Axis axis, double alpha,
                      int sign, Level level = Level::Ground);

/// Haar-ish random state: i.i.d. complex gaussian amplitudes, normalized.
/// Deterministic for a given seed (see GaussianSource).
StateVector random_state(const SpaceDescriptor& space, std::uint64_t seed);

/// Random vibrational state supported on Fock levels 0..max_n of one axis,
/// electronic factor pinned to `level`, other axes ground.
StateVector random_vibrational_state(const SpaceDescriptor& space, Axis axis,
                                     int max_n, std::uint64_t seed,
                                     Level level = Level::Ground);

/// Normalized linear combination; throws NormZero if the sum cancels and
/// SpaceMismatch if the terms disagree on the space.
StateVector superposition(const std::vector<std::pair<std::complex<double>, StateVector>>& terms);

/// Zero out every amplitude with axis occupation above max_n, renormalize.
StateVector truncate_above(const StateVector& state, Axis axis, int max_n);

/// Guard utility: highest Fock level of `axis` carrying more than
/// `population_floor` of probability. -1 when nothing does.
int max_occupied_level(const StateVector& state, Axis axis,
                       double population_floor = 1e-14);

} // namespace ionmirror
