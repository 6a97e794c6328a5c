#pragma once

#include <functional>
#include <vector>

#include "ionmirror/beams.hpp"
#include "ionmirror/operators.hpp"
#include "ionmirror/raman.hpp"

namespace ionmirror {

// Hamiltonian builders. Conventions:
//
//  * hbar = 1; matrices are in angular-frequency units (rad/us) and evolution
//    is exp(-i H t) with t in us.
//
//  * The driven three-level model is built in the frame co-rotating with both
//    lasers. With W = w_g|g><g| + w_e|e><e| + w_aux|aux><aux| and the choice
//    w_g = omega_g, w_e = omega_g + (omega_a - omega_b), w_aux = omega_g + omega_a,
//    the transformed Hamiltonian U H U^dag - W is time independent:
//
//        (omega_atomic - omega_L)|e><e|  -  detuning_a |aux><aux|
//        + omega0 * sum_axes n_axis
//        - [ g_a e^{-i k_a . r} |g><aux| + g_b e^{-i k_b . r} |e><aux| + h.c. ]
//
//    where omega_L = omega_a - omega_b. All frame choices here differ only by
//    state-independent phases, so populations and fidelities between states
//    evolved in the same frame are frame-invariant.
//
//  * Plane-wave factors e^{-i k . r} factorize over axes because the per-axis
//    displacement generators commute: with eta_j the per-axis Lamb-Dicke
//    components, e^{-i k . r} = prod_j e^{-i eta_j (a_j + a_j^dag)}.

/// Exact exponential e^{-i eta (a_L + a_L^dag)}. Each per-axis factor is
/// exponentiated in a padded ladder and the result restricted to the
/// requested window, so entries equal the untruncated operator's matrix
/// elements to ~1e-13. Columns at the truncation boundary are consequently
/// sub-unitary by the weight displaced past the cutoff; keep boundary
/// occupation negligible (see max_occupied_level).
OperatorMatrix plane_wave_operator(const SpaceDescriptor& space, const ModeSelector& mode,
                                   double eta);

/// Companion cross-check: the normally ordered expansion
/// e^{-eta^2/2} sum_{s,j <= j_max} (-i eta)^{s+j} / (s! j!) (a^dag)^j a^s
/// evaluated with truncated ladder matrices.
OperatorMatrix plane_wave_series(const SpaceDescriptor& space, const ModeSelector& mode,
                                 double eta, int j_max);

/// Plane-wave factor for a physical wavevector: e^{-i k . r} with per-axis
/// Lamb-Dicke components from (k, mass, omega0). Throws MissingAxis if k has
/// a component along an axis the space does not carry.
OperatorMatrix plane_wave_for_wavevector(const SpaceDescriptor& space,
                                         const Eigen::Vector3d& k, double mass_kg,
                                         double omega0);

/// Per-level coefficients f(n) of the resonant vibronic ladder series,
/// f(n) = e^{-eta^2/2} sum_{j=0}^{min(n, j_max)} (-1)^j eta^{2j}/(j!)^2 * n!/(n-j)!,
/// which at full order equal <n| e^{-i eta (a + a^dag)} |n>.
std::vector<double> series_level_coefficients(double eta, int j_max, int levels);

/// Resonant single-beam Hamiltonian after dropping the off-resonant ladder
/// terms: H = -g f(n_L) sigma_x with f as above. Diagonal in the mode's Fock
/// basis; Hermitian.
OperatorMatrix vibronic_series_hamiltonian(const BeamSpec& beam, const SpaceDescriptor& space);

/// Sum of two resonant beams driving the same mode (AxisMismatch otherwise).
OperatorMatrix two_beam_hamiltonian(const BeamSpec& beam1, const BeamSpec& beam2,
                                    const SpaceDescriptor& space);

/// Idealized reflection generator H = g n_L sigma_x.
OperatorMatrix parity_hamiltonian(double g, const SpaceDescriptor& space,
                                  const ModeSelector& mode);

/// Time-independent three-level model in the co-rotating frame (see above).
/// Requires electronic_dim == 3.
OperatorMatrix full_lambda_hamiltonian(const RamanParams& params, const SpaceDescriptor& space);

/// The model after aux elimination, in the same frame, embeddable in either a
/// two- or three-level space (the aux row, when present, is decoupled and
/// keeps its shifted energy):
///
///     -2|g_a|^2/det_a |g><g| + [(omega_atomic - omega_L) - 2|g_b|^2/det_b] |e><e|
///     + omega0 sum n - [ g_eff e^{-i k_L . r} |g><e| + h.c. ]
OperatorMatrix effective_hamiltonian(const RamanParams& params, const SpaceDescriptor& space);

/// One rotating term of the interaction-picture vibronic expansion:
/// coefficient * (a^dag)^j a^s tensor |g><e|, oscillating at `frequency`;
/// the Hermitian conjugate partner is implicit.
struct InteractionTerm {
    int j = 0;
    int s = 0;
    double frequency = 0.0; // rad/us; (j - s) omega0 - detuning
    Eigen::MatrixXcd m;
};

/// All terms with j, s <= beam.series_order. `detuning` is the offset of the
/// composite drive from the (shifted) atomic resonance; resonant drive = 0.
std::vector<InteractionTerm> interaction_picture_terms(const BeamSpec& beam,
                                                       const SpaceDescriptor& space,
                                                       double omega0, double detuning);

/// Callable time-dependent Hamiltonian H(t) = sum_k [e^{i f_k t} M_k + h.c.].
struct TimeDependentHamiltonian {
    SpaceDescriptor space;
    double max_frequency = 0.0; // fastest retained oscillation, rad/us
    std::function<Eigen::MatrixXcd(double)> eval;
};

/// Full interaction-picture evolution generator for one beam, keeping every
/// ladder sideband up to series_order. Dropping j != s terms and setting
/// detuning = 0 recovers vibronic_series_hamiltonian.
TimeDependentHamiltonian interaction_hamiltonian(const BeamSpec& beam,
                                                 const SpaceDescriptor& space,
                                                 double omega0, double detuning);

} // namespace ionmirror
