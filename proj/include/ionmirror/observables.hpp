#pragma once

#include <complex>
#include <vector>

#include "ionmirror/operators.hpp"
#include "ionmirror/state.hpp"

namespace ionmirror {

std::complex<double> overlap(const StateVector& a, const StateVector& b);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

/// Probability in each electronic level, indexed by level.
std::vector<double> electronic_populations(const StateVector& psi);

double level_population(const StateVector& psi, Level level);

/// Tr rho_e^2 of the reduced electronic state; 1 iff electron and motion are
/// unentangled.
double reduced_electronic_purity(const StateVector& psi);

double mean_occupation(const StateVector& psi, Axis axis);

/// <psi| H |psi> (H must be tagged hermitian; result is real).
double expectation(const OperatorMatrix& H, const StateVector& psi);

} // namespace ionmirror
