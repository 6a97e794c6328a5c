#include "doctest.h"

#include <cmath>
#include <complex>

#include "ionmirror/errors.hpp"
#include "ionmirror/hamiltonians.hpp"
#include "ionmirror/units.hpp"
#include "oracles.hpp"

using namespace ionmirror;
using cd = std::complex<double>;

TEST_CASE("plane wave equals the closed-form displacement matrix")
{
    // The implementation exponentiates a padded generator; the oracle sums the
    // Laguerre closed form. Agreement pins both.
    for (double eta : {0.05, 0.2, 0.3, 0.7}) {
        const auto space = make_space(2, {{Axis::Z, 12}});
        const auto pw = plane_wave_operator(space, ModeSelector::along(Axis::Z), eta);
        for (int m = 0; m < 12; ++m) {
            for (int n = 0; n < 12; ++n) {
                const cd got = pw.mat(space.index_of(Level::Ground, {0, 0, m}),
                                      space.index_of(Level::Ground, {0, 0, n}));
                const cd want = oracle::displacement_element(m, n, eta);
                CHECK(std::abs(got - want) < 1e-12);
            }
        }
        // electronic factor untouched: excited block identical, cross blocks zero
        const int v = space.vib_dim();
        CHECK(max_abs_entry(pw.mat.block(0, 0, v, v) - pw.mat.block(v, v, v, v)) < 1e-15);
        CHECK(max_abs_entry(pw.mat.block(v, 0, v, v)) == 0.0);
    }
}

TEST_CASE("plane wave at eta=0 is the identity")
{
    const auto space = make_space(2, {{Axis::Z, 6}});
    const auto pw = plane_wave_operator(space, ModeSelector::along(Axis::Z), 0.0);
    CHECK(max_abs_entry(pw.mat
                        - Eigen::MatrixXcd::Identity(space.total_dim(), space.total_dim()))
          == 0.0);
}

TEST_CASE("vacuum matrix element is the Gaussian prefactor")
{
    const auto space = make_space(2, {{Axis::Z, 30}});
    const auto pw = plane_wave_operator(space, ModeSelector::along(Axis::Z), 0.2);
    const cd elem = pw.mat(0, 0);
    CHECK(std::abs(elem - std::exp(-0.02)) < 1e-9);
    CHECK(std::abs(elem.real() - 0.980199) < 1e-6);
}

TEST_CASE("normally ordered series converges to the exact exponential")
{
    const auto space = make_space(2, {{Axis::Z, 10}});
    const auto mode = ModeSelector::along(Axis::Z);
    const auto exact = plane_wave_operator(space, mode, 0.3);
    const auto series = plane_wave_series(space, mode, 0.3, 12);
    CHECK(max_abs_entry(series.mat - exact.mat) < 1e-10);
    // order 8 still misses the far off-diagonal corner at the 1e-8 level
    CHECK(max_abs_entry(plane_wave_series(space, mode, 0.3, 8).mat - exact.mat) < 1e-6);
}

TEST_CASE("plane wave factorizes over axes")
{
    const auto space = make_space(2, {{Axis::X, 4}, {Axis::Y, 4}, {Axis::Z, 4}});
    const double eta = 0.25;
    const double theta = 0.9, phi = 0.4;
    const auto rotated = plane_wave_operator(space, ModeSelector::direction(theta, phi), eta);
    // same operator through the series in the rotated ladder operator
    const auto series = plane_wave_series(space, ModeSelector::direction(theta, phi), eta, 10);
    CHECK(max_abs_entry(rotated.mat - series.mat) < 1e-10);
}

TEST_CASE("plane wave for a physical wavevector matches the eta convention")
{
    const auto space = make_space(2, {{Axis::Z, 10}});
    const double mass = units::beryllium9_mass_kg;
    const double omega0 = 10.0;
    const auto k = wavevector_for_eta(0.3, Axis::Z, mass, omega0);
    const auto from_k = plane_wave_for_wavevector(space, k, mass, omega0);
    const auto from_eta = plane_wave_operator(space, ModeSelector::along(Axis::Z), 0.3);
    CHECK(max_abs_entry(from_k.mat - from_eta.mat) < 1e-12);

    Eigen::Vector3d sideways = Eigen::Vector3d::Zero();
    sideways(0) = 1e7;
    CHECK_THROWS_AS(plane_wave_for_wavevector(space, sideways, mass, omega0), MissingAxis);
}

TEST_CASE("ladder series coefficients: order 0, order 1, full order")
{
    // order 0: pure carrier e^{-eta^2/2}
    const auto f0 = series_level_coefficients(0.2, 0, 5);
    for (double v : f0) CHECK(v == doctest::Approx(std::exp(-0.02)).epsilon(1e-15));

    // order 1 at eta = 0.2: e^{-0.02} (1 - 0.04 n)
    const auto f1 = series_level_coefficients(0.2, 1, 5);
    for (int n = 0; n < 5; ++n)
        CHECK(f1[n] == doctest::Approx(std::exp(-0.02) * (1.0 - 0.04 * n)).epsilon(1e-14));

    // full order equals the diagonal of the exact plane-wave operator
    for (double eta : {0.2, 0.3}) {
        const auto f = series_level_coefficients(eta, 40, 12);
        for (int n = 0; n < 12; ++n) {
            CHECK(f[n] == doctest::Approx(oracle::level_coefficient(n, eta)).epsilon(1e-10));
            CHECK(f[n]
                  == doctest::Approx(oracle::truncated_level_coefficient(n, eta, 40))
                         .epsilon(1e-12));
        }
    }

    // truncated orders against the independent log-gamma summation
    for (int j_max : {2, 3, 5}) {
        const auto f = series_level_coefficients(0.3, j_max, 10);
        for (int n = 0; n < 10; ++n)
            CHECK(f[n]
                  == doctest::Approx(oracle::truncated_level_coefficient(n, 0.3, j_max))
                         .epsilon(1e-12));
    }
}

TEST_CASE("resonant vibronic Hamiltonian is -g f(n) sigma_x")
{
    const auto space = make_space(2, {{Axis::Z, 6}});
    const BeamSpec beam{2.0, 0.2, ModeSelector::along(Axis::Z), 8};
    const auto h = vibronic_series_hamiltonian(beam, space);
    CHECK(h.hermitian);
    const auto f = series_level_coefficients(0.2, 8, 6);
    const int v = space.vib_dim();
    for (int n = 0; n < 6; ++n) {
        CHECK(std::abs(h.mat(n, v + n) - (-2.0 * f[n])) < 1e-14); // |g><e| block
        CHECK(std::abs(h.mat(n, n)) == 0.0);                      // no diagonal part
    }
    // full order diagonal matches the exact plane-wave diagonal to 1e-10
    const BeamSpec full{2.0, 0.2, ModeSelector::along(Axis::Z), 30};
    const auto hf = vibronic_series_hamiltonian(full, space);
    for (int n = 0; n < 6; ++n)
        CHECK(std::abs(hf.mat(n, v + n) + 2.0 * oracle::level_coefficient(n, 0.2)) < 1e-10);
}

TEST_CASE("vibronic Hamiltonian on a rotated mode agrees with the aligned path")
{
    const auto space = make_space(2, {{Axis::X, 3}, {Axis::Y, 3}, {Axis::Z, 3}});
    const BeamSpec aligned{1.5, 0.25, ModeSelector::along(Axis::Z), 6};
    const BeamSpec rotated{1.5, 0.25, ModeSelector::direction(0.0, 0.0), 6};
    const auto ha = vibronic_series_hamiltonian(aligned, space);
    const auto hr = vibronic_series_hamiltonian(rotated, space);
    CHECK(max_abs_entry(ha.mat - hr.mat) < 1e-12);
}

TEST_CASE("two-beam Hamiltonian adds beams on a common mode only")
{
    const auto space = make_space(2, {{Axis::Z, 8}});
    const BeamSpec b1{3.0, 0.2, ModeSelector::along(Axis::Z), 8};
    const BeamSpec b2{-3.0785340288, 0.3, ModeSelector::along(Axis::Z), 8};
    const auto h = two_beam_hamiltonian(b1, b2, space);
    const Eigen::MatrixXcd sum = vibronic_series_hamiltonian(b1, space).mat
                                 + vibronic_series_hamiltonian(b2, space).mat;
    CHECK(max_abs_entry(h.mat - sum) == 0.0);

    const BeamSpec bx{1.0, 0.2, ModeSelector::along(Axis::X), 8};
    const auto space_xz = make_space(2, {{Axis::X, 4}, {Axis::Z, 4}});
    CHECK_THROWS_AS(two_beam_hamiltonian(b1, bx, space_xz), AxisMismatch);
}

TEST_CASE("calibrated two-beam matrix approximates g_parity n sigma_x to O(eta^4)")
{
    const auto space = make_space(2, {{Axis::Z, 6}});
    const double g1 = 3.0, eta1 = 0.2, eta2 = 0.3;
    const auto along_z = ModeSelector::along(Axis::Z);
    const int v = space.vib_dim();
    const double eta4 = std::pow(eta2, 4);

    // exact carrier cancellation: bound holds down to the empty vacuum row
    const auto exact = calibrate_two_beams(g1, eta1, eta2,
                                           CalibrationMode::ExactCarrierCancel);
    const auto he = two_beam_hamiltonian(BeamSpec{g1, eta1, along_z, 12},
                                         BeamSpec{exact.g2, eta2, along_z, 12}, space);
    const auto ideal = parity_hamiltonian(exact.g_parity, space, along_z);
    for (int n = 0; n <= 4; ++n) {
        const double dev = std::abs(he.mat(n, v + n) - ideal.mat(n, v + n));
        CHECK(dev <= 2.0 * std::abs(g1) * eta4 * (n * n + n) + 1e-12);
    }

    // leading-order calibration: same bound on the driven levels, while the
    // vacuum keeps the residual carrier, itself O(eta^4)
    const auto lead = calibrate_two_beams(g1, eta1, eta2);
    const auto hl = two_beam_hamiltonian(BeamSpec{g1, eta1, along_z, 12},
                                         BeamSpec{lead.g2, eta2, along_z, 12}, space);
    for (int n = 1; n <= 4; ++n) {
        const double dev = std::abs(hl.mat(n, v + n) - lead.g_parity * n);
        CHECK(dev <= 2.0 * std::abs(g1) * eta4 * (n * n + n));
    }
    const double carrier = std::abs(g1 * std::exp(-eta1 * eta1 / 2)
                                    + lead.g2 * std::exp(-eta2 * eta2 / 2));
    CHECK(std::abs(hl.mat(0, v)) == doctest::Approx(carrier).epsilon(1e-12));
    CHECK(carrier < std::abs(g1) * eta4);
}

TEST_CASE("two-beam degenerate limits")
{
    const auto space = make_space(2, {{Axis::Z, 5}});
    // g2 = 0 leaves the single-beam Hamiltonian
    const BeamSpec b1{2.0, 0.2, ModeSelector::along(Axis::Z), 8};
    const BeamSpec off{0.0, 0.3, ModeSelector::along(Axis::Z), 8};
    CHECK(max_abs_entry(two_beam_hamiltonian(b1, off, space).mat
                        - vibronic_series_hamiltonian(b1, space).mat)
          == 0.0);
    // two pure carriers with opposite strengths cancel exactly
    const BeamSpec c1{2.0, 0.0, ModeSelector::along(Axis::Z), 8};
    const BeamSpec c2{-2.0, 0.0, ModeSelector::along(Axis::Z), 8};
    CHECK(max_abs_entry(two_beam_hamiltonian(c1, c2, space).mat) == 0.0);
}

TEST_CASE("idealized reflection generator g n sigma_x")
{
    const auto space = make_space(2, {{Axis::Z, 5}});
    const double g = 1.3;
    const auto h = parity_hamiltonian(g, space, ModeSelector::along(Axis::Z));
    const int v = space.vib_dim();
    // <g, n|H|e, n> = g n
    CHECK(std::abs(h.mat(2, v + 2) - 2.0 * g) < 1e-15);
    // vacuum row and column vanish
    CHECK(h.mat.row(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.mat.col(0).cwiseAbs().maxCoeff() == 0.0);
    // commutes with n and with sigma_x
    const auto n_op = number_operator(space, Axis::Z).mat;
    const auto sx = pauli_x(space).mat;
    CHECK(max_abs_entry(h.mat * n_op - n_op * h.mat) == 0.0);
    CHECK(max_abs_entry(h.mat * sx - sx * h.mat) == 0.0);
}

TEST_CASE("driven three-level model: free limit and zero Lamb-Dicke structure")
{
    const auto space = make_space(3, {{Axis::Z, 3}});
    auto p = make_symmetric_raman(1.0, 100.0, 10.0, 0.0, Axis::Z);

    SUBCASE("couplings off: diagonal of detunings and trap energies")
    {
        p.g_a = 0.0;
        p.g_b = 0.0;
        const auto h = full_lambda_hamiltonian(p, space);
        CHECK(max_abs_entry(h.mat - Eigen::MatrixXcd(h.mat.diagonal().asDiagonal()))
              == 0.0);
        const int v = space.vib_dim();
        // frame energies: 0 for |g>, two-photon resonance for |e>, -detuning for aux
        CHECK(std::abs(h.mat(0, 0)) == 0.0);
        CHECK(std::abs(h.mat(v, v) - (p.omega_atomic() - (p.omega_a - p.omega_b))) < 1e-12);
        CHECK(std::abs(h.mat(2 * v, 2 * v) - (-p.detuning_a())) < 1e-12);
        // trap ladder on each electronic level
        CHECK(std::abs(h.mat(1, 1) - h.mat(0, 0) - p.omega0) < 1e-12);
    }

    SUBCASE("plane-wave couplings at eta=0 have magnitude |g_a| in one block")
    {
        const auto h = full_lambda_hamiltonian(p, space);
        const int v = space.vib_dim();
        // |g><aux| block: -g_a * identity
        CHECK(std::abs(h.mat(0, 2 * v) + p.g_a) < 1e-14);
        CHECK(std::abs(h.mat(1, 2 * v + 1) + p.g_a) < 1e-14);
        // no direct g-e coupling in the full model
        CHECK(max_abs_entry(h.mat.block(0, v, v, v)) == 0.0);
        CHECK(h.hermitian);
    }
}

TEST_CASE("effective model embeds in two- and three-level spaces consistently")
{
    const auto p = make_symmetric_raman(1.0, 100.0, 10.0, 0.2, Axis::Z);
    const auto space2 = make_space(2, {{Axis::Z, 4}});
    const auto space3 = make_space(3, {{Axis::Z, 4}});
    const auto h2 = effective_hamiltonian(p, space2);
    const auto h3 = effective_hamiltonian(p, space3);
    const int v = 4;
    // the g/e sector is identical
    CHECK(max_abs_entry(h2.mat - h3.mat.topLeftCorner(2 * v, 2 * v)) < 1e-14);
    // the aux row is decoupled in the three-level embedding
    CHECK(max_abs_entry(h3.mat.block(0, 2 * v, 2 * v, v)) == 0.0);
    CHECK(max_abs_entry(h3.mat.block(2 * v, 0, v, 2 * v)) == 0.0);
    // coupling block carries g_eff times the plane wave of k_L
    const auto eff = derive_effective(p);
    const auto pw = plane_wave_operator(space2, ModeSelector::along(Axis::Z), eff.eta_L);
    CHECK(max_abs_entry(h2.mat.block(0, v, v, v)
                        + eff.g_eff * pw.mat.topLeftCorner(v, v))
          < 1e-12);
}

TEST_CASE("interaction picture terms: structure and static limit")
{
    const auto space = make_space(2, {{Axis::Z, 6}});
    const BeamSpec beam{1.0, 0.2, ModeSelector::along(Axis::Z), 3};
    const double omega0 = 100.0;
    const auto terms = interaction_picture_terms(beam, space, omega0, 0.0);
    CHECK(terms.size() == 16); // (order+1)^2

    // each term oscillates at (j - s) omega0 - detuning
    for (const auto& t : terms)
        CHECK(t.frequency == doctest::Approx((t.j - t.s) * omega0).epsilon(1e-15));

    // resonant j=s terms reassemble the RWA Hamiltonian
    Eigen::MatrixXcd stat = Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim());
    for (const auto& t : terms)
        if (t.j == t.s) stat += t.m + t.m.adjoint();
    const auto rwa = vibronic_series_hamiltonian(beam, space);
    CHECK(max_abs_entry(stat - rwa.mat) < 1e-13);

    // the full t=0 sum reassembles -g (series plane wave)|g><e| + h.c.
    Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim());
    for (const auto& t : terms) h0 += t.m + t.m.adjoint();
    const auto pw = plane_wave_series(space, beam.mode, beam.eta, 3);
    const Eigen::MatrixXcd coupling =
        -beam.strength
        * (electronic_transition(space, Level::Excited, Level::Ground).mat * pw.mat);
    CHECK(max_abs_entry(h0 - (coupling + coupling.adjoint())) < 1e-13);
}

TEST_CASE("interaction Hamiltonian evaluates the rotating sum")
{
    const auto space = make_space(2, {{Axis::Z, 4}});
    const BeamSpec beam{1.0, 0.2, ModeSelector::along(Axis::Z), 2};
    const double omega0 = 50.0;
    const auto h = interaction_hamiltonian(beam, space, omega0, 0.0);
    CHECK(h.max_frequency == doctest::Approx(2.0 * omega0).epsilon(1e-15));

    // t=0 equals the static reassembly; generic t stays hermitian
    const auto terms = interaction_picture_terms(beam, space, omega0, 0.0);
    Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim());
    for (const auto& t : terms) h0 += t.m + t.m.adjoint();
    CHECK(max_abs_entry(h.eval(0.0) - h0) == 0.0);
    const auto ht = h.eval(0.37);
    CHECK(max_abs_entry(ht - ht.adjoint()) < 1e-14);

    // j=1, s=0 term picks up exactly e^{i omega0 t}
    for (const auto& t : terms) {
        if (t.j == 1 && t.s == 0) CHECK(t.frequency == doctest::Approx(omega0));
        if (t.j == 0 && t.s == 1) CHECK(t.frequency == doctest::Approx(-omega0));
    }
}

TEST_CASE("off-resonant terms average out over a trap period")
{
    // time average of the j != s part over one trap period is small when
    // omega0/g = 100: quadrature with 200 nodes
    const auto space = make_space(2, {{Axis::Z, 6}});
    const double g = 1.0, omega0 = 100.0;
    const BeamSpec beam{g, 0.2, ModeSelector::along(Axis::Z), 3};
    const auto full = interaction_hamiltonian(beam, space, omega0, 0.0);
    const auto rwa = vibronic_series_hamiltonian(beam, space);
    const double period = 2.0 * M_PI / omega0;
    const int nodes = 200;
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim());
    for (int k = 0; k < nodes; ++k)
        avg += full.eval((k + 0.5) * period / nodes);
    avg /= double(nodes);
    CHECK(max_abs_entry(avg - rwa.mat) < beam.eta * g * 1e-2);
}

TEST_CASE("hamiltonian builders validate their spaces")
{
    const auto space3 = make_space(3, {{Axis::Z, 4}});
    const auto space2 = make_space(2, {{Axis::Z, 4}});
    const BeamSpec beam{1.0, 0.2, ModeSelector::along(Axis::Z), 4};
    CHECK_THROWS_AS(vibronic_series_hamiltonian(beam, space3), WrongElectronicDim);
    CHECK_THROWS_AS(parity_hamiltonian(1.0, space3, ModeSelector::along(Axis::Z)),
                    WrongElectronicDim);
    const auto p = make_symmetric_raman(1.0, 100.0, 10.0, 0.2, Axis::Z);
    CHECK_THROWS_AS(full_lambda_hamiltonian(p, space2), WrongElectronicDim);
    CHECK_THROWS_AS(interaction_picture_terms(beam, space3, 10.0, 0.0),
                    WrongElectronicDim);
    CHECK_THROWS_AS(plane_wave_series(space2, beam.mode, 0.2, -1), InvalidParameter);
}
