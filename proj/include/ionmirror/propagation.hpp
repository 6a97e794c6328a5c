#pragma once

#include "ionmirror/hamiltonians.hpp"
#include "ionmirror/operators.hpp"
#include "ionmirror/record.hpp"
#include "ionmirror/state.hpp"

namespace ionmirror {

/// U(t) = exp(-i H t) through the Hermitian eigendecomposition of H. The
/// hermitian flag must be set and is re-verified numerically; failures of the
/// eigensolver surface as EigFailure. Unitary to tol::unitary by construction.
OperatorMatrix propagator(const OperatorMatrix& H, double t);

/// exp(-i H t) |psi0|. Norm drift beyond tol::norm_drift throws UnitarityLost
/// rather than renormalizing.
StateVector evolve_const(const OperatorMatrix& H, double t, const StateVector& psi0);

struct RecordOptions {
    bool keep_states = false;
    int stride = 1; // record every stride-th step (final point always kept)
};

/// Trajectory under a constant H sampled on t0, t0+dt, ..., t1. One
/// eigendecomposition; each sample is exact (no stepping error).
EvolutionRecord evolve_const_record(const OperatorMatrix& H, double t0, double t1,
                                    double dt, const StateVector& psi0,
                                    const RecordOptions& opts = {});

/// Fourth-order commutator-free Magnus stepper. Each step evaluates H at the
/// two Gauss-Legendre nodes t + (1/2 -+ sqrt(3)/6) h and applies
///
///   exp(-i h (b H1 + a H2)) exp(-i h (a H1 + b H2)),  a = 1/4 + sqrt(3)/6,
///                                                     b = 1/4 - sqrt(3)/6,
///
/// with each factor exponentiated exactly (Hermitian eigendecomposition), so
/// every step is unitary to solver precision and the scheme converges at
/// order 4. dt must resolve the fastest retained oscillation:
/// dt <= (2 pi / max_frequency) / 20, else StepTooLarge.
EvolutionRecord evolve_timedep(const TimeDependentHamiltonian& H, double t0, double t1,
                               double dt, const StateVector& psi0,
                               const RecordOptions& opts = {});

/// Largest admissible Magnus step for a given fastest frequency.
double max_timedep_step(double max_frequency);

} // namespace ionmirror
