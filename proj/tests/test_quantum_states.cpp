#include "kicktops/quantum_states.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kicktops;

namespace {

double second_moment(const SpinVector& v, Axis axis)
{
    const Moments m = spin_moments(v, axis);
    return m.variance + m.mean * m.mean;
}

std::vector<double> theta_grid()
{
    std::vector<double> out(50);
    for (int k = 0; k < 50; ++k) {
        out[k] = M_PI * k / 49.0;
    }
    return out;
}

}  // namespace

TEST_CASE("coherent state at the north pole is |j, j>")
{
    for (int two_j : {1, 2, 9, 40}) {
        const SpinVector v = coherent_state(SpinMagnitude(two_j), 0.0, 1.3);
        for (int k = 0; k < two_j; ++k) {
            CHECK(std::abs(v.amps(k)) == 0.0);
        }
        CHECK(std::abs(v.amps(two_j) - Complex(1.0, 0.0)) < 1e-15);
    }
}

TEST_CASE("coherent state j = 1/2 along +x")
{
    const SpinVector v = coherent_state(SpinMagnitude(1), M_PI / 2, 0.0);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(v.amps(0) - Complex(h, 0.0)) < 1e-15);
    CHECK(std::abs(v.amps(1) - Complex(h, 0.0)) < 1e-15);
    CHECK(spin_moments(v, Axis::X).mean == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("coherent state equals the rotated top state")
{
    for (int two_j : {1, 2, 5, 12, 21}) {
        for (double theta : {0.0, 0.4, 1.7, M_PI}) {
            for (double phi : {0.0, 0.9, 4.0}) {
                const SpinVector v = coherent_state(SpinMagnitude(two_j), theta, phi);
                // Oracle carries the global phase e^{-i j phi}.
                const Eigen::VectorXcd ref =
                    oracle::rotated_top_state(two_j, theta, phi) * std::polar(1.0, 0.5 * two_j * phi);
                CHECK((v.amps - ref).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("coherent state moments")
{
    for (int two_j : {1, 4, 15, 60, 280}) {
        const SpinMagnitude j(two_j);
        const double jv = j.value();
        for (double theta : {0.0, 0.3, 1.1, 2.0, M_PI}) {
            for (double phi : {0.0, 0.7, 3.5}) {
                CAPTURE(two_j);
                CAPTURE(theta);
                CAPTURE(phi);
                const SpinVector v = coherent_state(j, theta, phi);
                const Moments mx = spin_moments(v, Axis::X);
                const Moments my = spin_moments(v, Axis::Y);
                const Moments mz = spin_moments(v, Axis::Z);
                CHECK(std::abs(mz.mean - jv * std::cos(theta)) < 1e-12 * std::max(1.0, jv));
                const Complex plus(mx.mean, my.mean);
                CHECK(std::abs(plus - jv * std::polar(1.0, phi) * std::sin(theta)) <
                      1e-12 * std::max(1.0, jv));
                const double mean2 = mx.mean * mx.mean + my.mean * my.mean + mz.mean * mz.mean;
                const double normalized = (jv * (jv + 1.0) - mean2) / (jv * (jv + 1.0));
                CHECK(normalized == doctest::Approx(1.0 / (jv + 1.0)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("property: Heisenberg product is saturated only at the poles")
{
    for (int two_j : {1, 2, 7, 30}) {
        const double jv = 0.5 * two_j;
        for (double theta : theta_grid()) {
            for (double phi : {0.0, 1.0, 2.5}) {
                const SpinVector v = coherent_state(SpinMagnitude(two_j), theta, phi);
                const double lhs = second_moment(v, Axis::X) * second_moment(v, Axis::Y);
                const double jz = spin_moments(v, Axis::Z).mean;
                const double gap = lhs - 0.25 * jz * jz;
                CAPTURE(two_j);
                CAPTURE(theta);
                CHECK(gap > -1e-12 * jv * jv);
                if (theta == 0.0 || theta == M_PI) {
                    CHECK(std::abs(gap) < 1e-12 * std::max(1.0, jv * jv));
                } else {
                    CHECK(gap > 1e-12 * std::max(1.0, jv * jv));
                }
            }
        }
    }
}

TEST_CASE("property: coherent states are normalized up to j = 300")
{
    double worst = 0.0;
    for (int two_j = 0; two_j <= 600; two_j += (two_j < 40 ? 1 : 37)) {
        for (double theta : theta_grid()) {
            const SpinVector v = coherent_state(SpinMagnitude(two_j), theta, 0.83);
            worst = std::max(worst, std::abs(v.norm() - 1.0));
        }
    }
    for (double theta : theta_grid()) {
        worst = std::max(worst, std::abs(coherent_state(SpinMagnitude(600), theta, 2.0).norm() - 1.0));
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("coherent state rejects polar angles outside [0, pi]")
{
    CHECK_THROWS_AS(coherent_state(SpinMagnitude(2), -0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(coherent_state(SpinMagnitude(2), 3.2, 0.0), std::invalid_argument);
}

TEST_CASE("product state")
{
    std::mt19937_64 rng(11);
    const SpinMagnitude s(3), l(4);
    const SpinVector a{s, oracle::random_vector(rng, s.dim())};
    const SpinVector b{l, oracle::random_vector(rng, l.dim())};
    const QuantumState psi = product_state(a, b);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const ReducedDensity rho = reduced_density_l(psi);
    for (int k = 0; k < l.dim(); ++k) {
        CHECK(rho.rho(k, k).real() == doctest::Approx(std::norm(b.amps(k))).epsilon(1e-13));
    }
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Bell state reduces to the maximally mixed qubit")
{
    const SpinMagnitude half(1);
    QuantumState bell{half, half, AmplitudeGrid::Zero(2, 2)};
    bell.amps(0, 0) = bell.amps(1, 1) = 1.0 / std::sqrt(2.0);
    const ReducedDensity rho = reduced_density_l(bell);
    CHECK((rho.rho - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(rho.purity() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rho.von_neumann_entropy() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("reduced density matches an explicit partial trace")
{
    std::mt19937_64 rng(5);
    const QuantumState psi = support::random_state(SpinMagnitude(2), SpinMagnitude(3), rng);
    const int ds = psi.s.dim(), dl = psi.l.dim();
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(dl, dl);
    for (int a = 0; a < dl; ++a) {
        for (int b = 0; b < dl; ++b) {
            for (int i = 0; i < ds; ++i) {
                expected(a, b) += psi.amps(i, a) * std::conj(psi.amps(i, b));
            }
        }
    }
    CHECK((reduced_density_l(psi).rho - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("property: reduced spectra are probability vectors and purities agree")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const SpinMagnitude s(1 + trial % 7), l(2 + trial % 5);
        const QuantumState psi = support::random_state(s, l, rng);
        const ReducedDensity rl = reduced_density_l(psi);
        const ReducedDensity rs = reduced_density_s(psi);
        const Eigen::VectorXd spec = rl.spectrum();
        CHECK(spec.minCoeff() > -1e-10);
        CHECK(spec.sum() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(rl.purity() - rs.purity()) < 1e-10);
        CHECK(std::abs(rl.von_neumann_entropy() - rs.von_neumann_entropy()) < 1e-9);
    }
}

TEST_CASE("joint-state moments agree with single-spin moments on product states")
{
    const SpinVector a = coherent_state(SpinMagnitude(6), 0.7, 1.9);
    const SpinVector b = coherent_state(SpinMagnitude(9), 2.2, 0.4);
    const QuantumState psi = product_state(a, b);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        const Moments js = spin_moments(psi, Factor::S, axis);
        const Moments jl = spin_moments(psi, Factor::L, axis);
        CHECK(js.mean == doctest::Approx(spin_moments(a, axis).mean).epsilon(1e-12));
        CHECK(jl.mean == doctest::Approx(spin_moments(b, axis).mean).epsilon(1e-12));
        CHECK(jl.variance == doctest::Approx(spin_moments(b, axis).variance).epsilon(1e-10));
    }
}

TEST_CASE("J_y by ladder operators matches the dense matrix")
{
    std::mt19937_64 rng(3);
    for (int two_j : {1, 4, 11}) {
        const Eigen::VectorXcd v = oracle::random_vector(rng, two_j + 1);
        CHECK((apply_jy(SpinMagnitude(two_j), v) - oracle::jy(two_j) * v).cwiseAbs().maxCoeff() < 1e-14);
    }
}
