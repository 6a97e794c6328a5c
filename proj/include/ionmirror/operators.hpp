#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ionmirror/space.hpp"
#include "ionmirror/state.hpp"

namespace ionmirror {

/// Dense operator tagged with its space. The hermitian flag is established at
/// construction (make_operator verifies it) and propagated by the builders.
struct OperatorMatrix {
    SpaceDescriptor space;
    Eigen::MatrixXcd mat;
    bool hermitian = false;
};

/// Wrap a matrix, checking the dimension and (when claimed) hermiticity
/// against tol::hermitian.
OperatorMatrix make_operator(const SpaceDescriptor& space, Eigen::MatrixXcd m,
                             bool hermitian);

double max_abs_entry(const Eigen::MatrixXcd& m);

/// Selects the motional mode an operator acts along: either a bare trap axis
/// or the linear combination a_L = cos(theta) a_z + sin(theta) cos(phi) a_x
/// + sin(theta) sin(phi) a_y (unit direction, real coefficients).
struct ModeSelector {
    bool axis_aligned = true;
    Axis axis = Axis::Z;
    double theta = 0.0;
    double phi = 0.0;

    static ModeSelector along(Axis a) { return {true, a, 0.0, 0.0}; }
    static ModeSelector direction(double theta, double phi)
    {
        return {false, Axis::Z, theta, phi};
    }

    /// Amplitude of each Cartesian mode in a_L, indexed by axis_index.
    std::array<double, 3> weights() const;
};

OperatorMatrix identity_operator(const SpaceDescriptor& space);

/// Truncated ladder operators: <n-1| a |n> = sqrt(n). [a, a^dag] = 1 holds on
/// levels below the cutoff boundary; the boundary level sees 1 - N instead.
OperatorMatrix annihilation_operator(const SpaceDescriptor& space, Axis axis);
OperatorMatrix creation_operator(const SpaceDescriptor& space, Axis axis);
OperatorMatrix number_operator(const SpaceDescriptor& space, Axis axis);

/// a_L for an arbitrary direction; requires all three axes present.
OperatorMatrix rotated_mode_annihilation(const SpaceDescriptor& space,
                                         double theta, double phi);

/// Dispatch on the selector: annihilation_operator or rotated_mode_annihilation.
OperatorMatrix mode_annihilation(const SpaceDescriptor& space, const ModeSelector& mode);

/// n_L = a_L^dag a_L for the selected mode (diagonal for axis-aligned modes).
OperatorMatrix mode_number_operator(const SpaceDescriptor& space, const ModeSelector& mode);

/// |to><from| on the electronic factor, identity on the motion.
OperatorMatrix electronic_transition(const SpaceDescriptor& space, Level from, Level to);

/// sigma_x on the g/e electronic pair (aux row untouched when present).
OperatorMatrix pauli_x(const SpaceDescriptor& space);

/// Single-axis specular reflection: diag((-1)^{n_axis}), identity elsewhere.
/// Hermitian, unitary, and an involution in the truncated space.
OperatorMatrix reflection_operator(const SpaceDescriptor& space, Axis axis);

/// Full space reversal r -> -r: the product of the three single-axis
/// reflections. Requires all three axes present.
OperatorMatrix space_reversal_operator(const SpaceDescriptor& space);

StateVector apply(const OperatorMatrix& op, const StateVector& state);

} // namespace ionmirror
