#include "ionmirror/hamiltonians.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ionmirror/errors.hpp"

namespace ionmirror {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cd = std::complex<double>;

constexpr cd kI{0.0, 1.0};

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b)
{
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

// e^{-i eta (a + a^dag)} on a window of `dim` levels. Exponentiating the
// generator truncated at `dim` corrupts the columns near the boundary by
// O(eta), so the exponential is taken in a padded ladder and windowed
// afterwards; the pad grows until the window stops moving.
MatrixXcd displacement_window(int dim, double eta)
{
    if (eta == 0.0) return MatrixXcd::Identity(dim, dim);
    MatrixXcd prev;
    for (int pad = 8; pad <= 1024; pad += 8) {
        const int big = dim + pad;
        MatrixXd q = MatrixXd::Zero(big, big);
        for (int n = 1; n < big; ++n) {
            q(n - 1, n) = std::sqrt(static_cast<double>(n));
            q(n, n - 1) = q(n - 1, n);
        }
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(q);
        if (es.info() != Eigen::Success)
            throw EigFailure("displacement generator eigensolve failed");
        Eigen::VectorXcd phases =
            (es.eigenvalues().array().cast<cd>() * (-kI * eta)).exp();
        const MatrixXcd v = es.eigenvectors().cast<cd>();
        MatrixXcd window =
            (v * phases.asDiagonal() * v.adjoint()).topLeftCorner(dim, dim);
        if (prev.size() > 0 && max_abs_entry(window - prev) < 1e-13) return window;
        prev = std::move(window);
    }
    throw InvalidParameter("displacement eta too large for padded evaluation");
}

std::array<double, 3> per_axis_etas(const ModeSelector& mode, double eta)
{
    std::array<double, 3> out{0.0, 0.0, 0.0};
    if (mode.axis_aligned) {
        out[axis_index(mode.axis)] = eta;
        return out;
    }
    const auto w = mode.weights();
    for (int j = 0; j < 3; ++j) out[j] = eta * w[j];
    return out;
}

// I_elec tensor prod_axes e^{-i eta_j (a_j + a_j^dag)}, axes ordered as in
// the basis index (x slowest).
MatrixXcd plane_wave_matrix(const SpaceDescriptor& space, const std::array<double, 3>& etas)
{
    for (Axis a : kAllAxes)
        if (etas[axis_index(a)] != 0.0 && !space.has_axis(a))
            throw MissingAxis(std::string("plane wave pushes along absent axis ") + axis_name(a));
    MatrixXcd vib = MatrixXcd::Identity(1, 1);
    for (Axis a : space.axes())
        vib = kron(vib, displacement_window(space.cutoff(a), etas[axis_index(a)])).eval();
    const int e = space.electronic_dim;
    return kron(MatrixXcd::Identity(e, e), vib);
}

// (-i eta)^p / p! for p = 0..order.
std::vector<cd> phase_factorials(double eta, int order)
{
    std::vector<cd> pref(static_cast<size_t>(order) + 1);
    pref[0] = 1.0;
    for (int p = 1; p <= order; ++p)
        pref[p] = pref[p - 1] * (-kI * eta) / static_cast<double>(p);
    return pref;
}

std::vector<MatrixXcd> matrix_powers(const MatrixXcd& m, int order)
{
    std::vector<MatrixXcd> pow(static_cast<size_t>(order) + 1);
    pow[0] = MatrixXcd::Identity(m.rows(), m.cols());
    for (int p = 1; p <= order; ++p) pow[p] = pow[p - 1] * m;
    return pow;
}

} // namespace

OperatorMatrix plane_wave_operator(const SpaceDescriptor& space, const ModeSelector& mode,
                                   double eta)
{
    return make_operator(space, plane_wave_matrix(space, per_axis_etas(mode, eta)), false);
}

OperatorMatrix plane_wave_series(const SpaceDescriptor& space, const ModeSelector& mode,
                                 double eta, int j_max)
{
    if (j_max < 0) throw InvalidParameter("series order must be >= 0");
    const MatrixXcd a = mode_annihilation(space, mode).mat;
    const auto apow = matrix_powers(a, j_max);
    const auto adpow = matrix_powers(a.adjoint(), j_max);
    const auto pref = phase_factorials(eta, j_max);
    const double gauss = std::exp(-0.5 * eta * eta);
    MatrixXcd sum = MatrixXcd::Zero(a.rows(), a.cols());
    for (int j = 0; j <= j_max; ++j)
        for (int s = 0; s <= j_max; ++s)
            sum += (gauss * pref[j] * pref[s]) * (adpow[j] * apow[s]);
    return make_operator(space, std::move(sum), false);
}

OperatorMatrix plane_wave_for_wavevector(const SpaceDescriptor& space,
                                         const Eigen::Vector3d& k, double mass_kg,
                                         double omega0)
{
    const auto etas = lamb_dicke_components(k, mass_kg, omega0);
    return make_operator(space, plane_wave_matrix(space, etas), false);
}

std::vector<double> series_level_coefficients(double eta, int j_max, int levels)
{
    if (j_max < 0) throw InvalidParameter("series order must be >= 0");
    if (levels < 0) throw InvalidParameter("level count must be >= 0");
    std::vector<double> f(static_cast<size_t>(levels));
    const double gauss = std::exp(-0.5 * eta * eta);
    const double e2 = eta * eta;
    for (int n = 0; n < levels; ++n) {
        const int top = std::min(n, j_max);
        double sum = 0.0;
        double term = 1.0;
        for (int j = 0;; ++j) {
            sum += term;
            if (j == top) break;
            term *= -e2 * static_cast<double>(n - j)
                    / static_cast<double>((j + 1) * (j + 1));
        }
        f[static_cast<size_t>(n)] = gauss * sum;
    }
    return f;
}

OperatorMatrix vibronic_series_hamiltonian(const BeamSpec& beam, const SpaceDescriptor& space)
{
    if (space.electronic_dim != 2)
        throw WrongElectronicDim("resonant vibronic drive needs a two-level ion");
    if (beam.series_order < 0) throw InvalidParameter("series order must be >= 0");
    if (beam.eta < 0.0) throw InvalidParameter("Lamb-Dicke parameter must be >= 0");
    const int d = space.total_dim();
    MatrixXcd series(d, d);
    if (beam.mode.axis_aligned) {
        const auto f = series_level_coefficients(beam.eta, beam.series_order,
                                                 space.cutoff(beam.mode.axis));
        Eigen::VectorXcd diag(d);
        for (int idx = 0; idx < d; ++idx) {
            const auto p = space.unpack(idx);
            diag(idx) = f[static_cast<size_t>(p.occ[axis_index(beam.mode.axis)])];
        }
        series = diag.asDiagonal();
    } else {
        const MatrixXcd a = mode_annihilation(space, beam.mode).mat;
        const auto apow = matrix_powers(a, beam.series_order);
        const auto adpow = matrix_powers(a.adjoint(), beam.series_order);
        const double gauss = std::exp(-0.5 * beam.eta * beam.eta);
        series.setZero();
        double coeff = gauss; // gauss * (-1)^j eta^{2j} / (j!)^2
        for (int j = 0;; ++j) {
            series += coeff * (adpow[j] * apow[j]);
            if (j == beam.series_order) break;
            coeff *= -(beam.eta * beam.eta)
                     / static_cast<double>((j + 1) * (j + 1));
        }
    }
    MatrixXcd h = -beam.strength * (pauli_x(space).mat * series);
    return make_operator(space, std::move(h), true);
}

OperatorMatrix two_beam_hamiltonian(const BeamSpec& beam1, const BeamSpec& beam2,
                                    const SpaceDescriptor& space)
{
    const auto w1 = beam1.mode.weights();
    const auto w2 = beam2.mode.weights();
    for (int j = 0; j < 3; ++j)
        if (std::abs(w1[j] - w2[j]) > 1e-12)
            throw AxisMismatch("two-beam drive requires both beams on one mode");
    const OperatorMatrix h1 = vibronic_series_hamiltonian(beam1, space);
    const OperatorMatrix h2 = vibronic_series_hamiltonian(beam2, space);
    return make_operator(space, h1.mat + h2.mat, true);
}

OperatorMatrix parity_hamiltonian(double g, const SpaceDescriptor& space,
                                  const ModeSelector& mode)
{
    if (space.electronic_dim != 2)
        throw WrongElectronicDim("reflection generator needs a two-level ion");
    MatrixXcd h = g * (pauli_x(space).mat * mode_number_operator(space, mode).mat);
    return make_operator(space, std::move(h), true);
}

OperatorMatrix full_lambda_hamiltonian(const RamanParams& params, const SpaceDescriptor& space)
{
    if (space.electronic_dim != 3)
        throw WrongElectronicDim("driven Lambda model needs g, e and aux levels");
    const int d = space.total_dim();
    MatrixXcd h = MatrixXcd::Zero(d, d);
    const double omega_l = params.omega_a - params.omega_b;
    h += (params.omega_atomic() - omega_l)
         * electronic_transition(space, Level::Excited, Level::Excited).mat;
    h += -params.detuning_a() * electronic_transition(space, Level::Aux, Level::Aux).mat;
    for (Axis a : space.axes()) h += params.omega0 * number_operator(space, a).mat;
    const MatrixXcd pw_a = plane_wave_matrix(
        space, lamb_dicke_components(params.k_a, params.ion_mass_kg, params.omega0));
    const MatrixXcd pw_b = plane_wave_matrix(
        space, lamb_dicke_components(params.k_b, params.ion_mass_kg, params.omega0));
    const MatrixXcd coupling =
        params.g_a * (electronic_transition(space, Level::Aux, Level::Ground).mat * pw_a)
        + params.g_b * (electronic_transition(space, Level::Aux, Level::Excited).mat * pw_b);
    h -= coupling + coupling.adjoint();
    return make_operator(space, std::move(h), true);
}

OperatorMatrix effective_hamiltonian(const RamanParams& params, const SpaceDescriptor& space)
{
    const EffectiveParams eff = derive_effective(params);
    const int d = space.total_dim();
    MatrixXcd h = MatrixXcd::Zero(d, d);
    h += (eff.omega_g_shifted - params.omega_g)
         * electronic_transition(space, Level::Ground, Level::Ground).mat;
    h += (eff.omega_e_shifted - (params.omega_g + eff.omega_L))
         * electronic_transition(space, Level::Excited, Level::Excited).mat;
    if (space.electronic_dim == 3)
        h += (eff.omega_aux_shifted - (params.omega_g + params.omega_a))
             * electronic_transition(space, Level::Aux, Level::Aux).mat;
    for (Axis a : space.axes()) h += params.omega0 * number_operator(space, a).mat;
    const MatrixXcd pw = plane_wave_matrix(
        space, lamb_dicke_components(eff.k_L, params.ion_mass_kg, params.omega0));
    const MatrixXcd coupling =
        eff.g_eff * (electronic_transition(space, Level::Excited, Level::Ground).mat * pw);
    h -= coupling + coupling.adjoint();
    return make_operator(space, std::move(h), true);
}

std::vector<InteractionTerm> interaction_picture_terms(const BeamSpec& beam,
                                                       const SpaceDescriptor& space,
                                                       double omega0, double detuning)
{
    if (space.electronic_dim != 2)
        throw WrongElectronicDim("interaction-picture drive needs a two-level ion");
    if (beam.series_order < 0) throw InvalidParameter("series order must be >= 0");
    const MatrixXcd a = mode_annihilation(space, beam.mode).mat;
    const auto apow = matrix_powers(a, beam.series_order);
    const auto adpow = matrix_powers(a.adjoint(), beam.series_order);
    const auto pref = phase_factorials(beam.eta, beam.series_order);
    const double gauss = std::exp(-0.5 * beam.eta * beam.eta);
    const MatrixXcd t_ge = electronic_transition(space, Level::Excited, Level::Ground).mat;
    std::vector<InteractionTerm> terms;
    terms.reserve(static_cast<size_t>(beam.series_order + 1)
                  * static_cast<size_t>(beam.series_order + 1));
    for (int j = 0; j <= beam.series_order; ++j) {
        for (int s = 0; s <= beam.series_order; ++s) {
            InteractionTerm t;
            t.j = j;
            t.s = s;
            t.frequency = (j - s) * omega0 - detuning;
            t.m = (-beam.strength * gauss * pref[j] * pref[s])
                  * (adpow[j] * apow[s] * t_ge);
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

TimeDependentHamiltonian interaction_hamiltonian(const BeamSpec& beam,
                                                 const SpaceDescriptor& space,
                                                 double omega0, double detuning)
{
    auto terms = interaction_picture_terms(beam, space, omega0, detuning);
    double fmax = 0.0;
    for (const auto& t : terms) fmax = std::max(fmax, std::abs(t.frequency));
    const int d = space.total_dim();
    TimeDependentHamiltonian h;
    h.space = space;
    h.max_frequency = fmax;
    h.eval = [terms = std::move(terms), d](double t) {
        MatrixXcd m = MatrixXcd::Zero(d, d);
        for (const auto& term : terms)
            m += std::exp(cd(0.0, term.frequency * t)) * term.m;
        MatrixXcd out = m + m.adjoint();
        return out;
    };
    return h;
}

} // namespace ionmirror
