#pragma once

// Central tolerance table. Every hard-coded numerical threshold used by the
// library (construction checks, propagation guards, verification passes)
// lives here so tests and tools quote the same numbers.

namespace ionmirror::tol {

inline constexpr double hermitian      = 1e-12; // max entry of |A - A^dag|
inline constexpr double involution     = 1e-12; // reflection^2 vs identity
inline constexpr double commutator     = 1e-12; // ladder algebra on interior levels
inline constexpr double state_norm     = 1e-12; // norm after state construction
inline constexpr double norm_drift     = 1e-10; // accumulated drift during evolution
inline constexpr double unitary        = 1e-10; // max entry of |U U^dag - 1|
inline constexpr double trajectory     = 1e-9;  // propagated vs closed-form amplitudes
inline constexpr double parity_eigen   = 1e-10; // NOT-gate input precondition
inline constexpr double anticommutator = 1e-10; // time-reversal precondition
inline constexpr double energy_drift   = 1e-9;  // relative <H> drift under constant H

} // namespace ionmirror::tol
