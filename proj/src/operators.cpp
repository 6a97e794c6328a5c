#include "ionmirror/operators.hpp"

#include <cmath>
#include <string>

#include "ionmirror/errors.hpp"
#include "ionmirror/tolerances.hpp"

namespace ionmirror {

double max_abs_entry(const Eigen::MatrixXcd& m)
{
    return m.cwiseAbs().maxCoeff();
}

OperatorMatrix make_operator(const SpaceDescriptor& space, Eigen::MatrixXcd m, bool hermitian)
{
    int d = space.total_dim();
    if (m.rows() != d || m.cols() != d)
        throw SpaceMismatch("operator is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " on a dim-" + std::to_string(d) +
                            " space");
    if (hermitian && max_abs_entry(m - m.adjoint()) > tol::hermitian)
        throw NotHermitian("matrix tagged hermitian fails the symmetry check");
    return {space, std::move(m), hermitian};
}

std::array<double, 3> ModeSelector::weights() const
{
    std::array<double, 3> w{0.0, 0.0, 0.0};
    if (axis_aligned) {
        w[axis_index(axis)] = 1.0;
    } else {
        w[axis_index(Axis::Z)] = std::cos(theta);
        w[axis_index(Axis::X)] = std::sin(theta) * std::cos(phi);
        w[axis_index(Axis::Y)] = std::sin(theta) * std::sin(phi);
    }
    return w;
}

OperatorMatrix identity_operator(const SpaceDescriptor& space)
{
    return {space, Eigen::MatrixXcd::Identity(space.total_dim(), space.total_dim()), true};
}

OperatorMatrix annihilation_operator(const SpaceDescriptor& space, Axis axis)
{
    int ai = axis_index(axis);
    space.cutoff(axis); // throws MissingAxis when absent
    int d = space.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int col = 0; col < d; ++col) {
        auto p = space.unpack(col);
        int n = p.occ[ai];
        if (n == 0) continue;
        auto q = p;
        q.occ[ai] = n - 1;
        m(space.index_of(q.level, q.occ), col) = std::sqrt(double(n));
    }
    return {space, std::move(m), false};
}

OperatorMatrix creation_operator(const SpaceDescriptor& space, Axis axis)
{
    OperatorMatrix a = annihilation_operator(space, axis);
    return {space, a.mat.adjoint(), false};
}

OperatorMatrix number_operator(const SpaceDescriptor& space, Axis axis)
{
    int ai = axis_index(axis);
    space.cutoff(axis);
    int d = space.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k)
        m(k, k) = double(space.unpack(k).occ[ai]);
    return {space, std::move(m), true};
}

OperatorMatrix rotated_mode_annihilation(const SpaceDescriptor& space, double theta, double phi)
{
    for (Axis a : kAllAxes)
        if (!space.has_axis(a))
            throw MissingAxis("rotated mode needs all three axes; " +
                              std::string(axis_name(a)) + " is absent");
    auto w = ModeSelector::direction(theta, phi).weights();
    int d = space.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (Axis a : kAllAxes) {
        double c = w[axis_index(a)];
        if (c != 0.0) m += c * annihilation_operator(space, a).mat;
    }
    return {space, std::move(m), false};
}

OperatorMatrix mode_annihilation(const SpaceDescriptor& space, const ModeSelector& mode)
{
    return mode.axis_aligned ? annihilation_operator(space, mode.axis)
                             : rotated_mode_annihilation(space, mode.theta, mode.phi);
}

OperatorMatrix mode_number_operator(const SpaceDescriptor& space, const ModeSelector& mode)
{
    if (mode.axis_aligned) return number_operator(space, mode.axis);
    Eigen::MatrixXcd a = mode_annihilation(space, mode).mat;
    return {space, a.adjoint() * a, true};
}

OperatorMatrix electronic_transition(const SpaceDescriptor& space, Level from, Level to)
{
    int lf = level_index(from), lt = level_index(to);
    if (lf >= space.electronic_dim || lt >= space.electronic_dim)
        throw UnknownLevel("transition outside the electronic space");
    int d = space.total_dim();
    int v = space.vib_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < v; ++k)
        m(lt * v + k, lf * v + k) = 1.0;
    return {space, std::move(m), from == to};
}

OperatorMatrix pauli_x(const SpaceDescriptor& space)
{
    Eigen::MatrixXcd m = electronic_transition(space, Level::Ground, Level::Excited).mat +
                         electronic_transition(space, Level::Excited, Level::Ground).mat;
    return {space, std::move(m), true};
}

OperatorMatrix reflection_operator(const SpaceDescriptor& space, Axis axis)
{
    int ai = axis_index(axis);
    space.cutoff(axis);
    int d = space.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k)
        m(k, k) = (space.unpack(k).occ[ai] % 2 == 0) ? 1.0 : -1.0;
    return {space, std::move(m), true};
}

OperatorMatrix space_reversal_operator(const SpaceDescriptor& space)
{
    for (Axis a : kAllAxes)
        if (!space.has_axis(a))
            throw MissingAxis("space reversal needs all three axes; " +
                              std::string(axis_name(a)) + " is absent");
    int d = space.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        auto occ = space.unpack(k).occ;
        int parity = (occ[0] + occ[1] + occ[2]) % 2;
        m(k, k) = parity == 0 ? 1.0 : -1.0;
    }
    return {space, std::move(m), true};
}

StateVector apply(const OperatorMatrix& op, const StateVector& state)
{
    if (!(op.space == state.space))
        throw SpaceMismatch("operator and state live on different spaces");
    return {state.space, op.mat * state.amplitudes};
}

} // namespace ionmirror
