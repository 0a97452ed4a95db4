#pragma once

#include "kicktops/spin_algebra.hpp"

#include <Eigen/Dense>

#include <complex>

namespace kicktops {

using Complex = std::complex<double>;

/// Amplitude grid over (m_s, m_l): m_s is the slow (row) index, m_l the fast one.
using AmplitudeGrid = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Pure state of one spin, amps(k) for m = -j + k.
struct SpinVector {
    SpinMagnitude j;
    Eigen::VectorXcd amps;

    double norm() const { return amps.norm(); }
};

/// Pure state on H_s ⊗ H_l.
struct QuantumState {
    SpinMagnitude s;
    SpinMagnitude l;
    AmplitudeGrid amps;

    double norm() const { return amps.norm(); }
};

struct ReducedDensity {
    SpinMagnitude j;
    Eigen::MatrixXcd rho;

    double trace() const { return rho.trace().real(); }
    double purity() const;
    /// Eigenvalues of rho, ascending.
    Eigen::VectorXd spectrum() const;
    /// -Tr rho ln rho in nats, from the spectrum (negative round-off clipped).
    double von_neumann_entropy() const;
};

enum class Factor { S, L };
enum class Axis { X, Y, Z };

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Spin coherent state |θ,φ> = R(θ,φ)|j,j>, amplitudes
/// sqrt(C(2j, j+m)) cos(θ/2)^(j+m) sin(θ/2)^(j-m) e^{i(j-m)φ}
/// evaluated in log space. The m = j amplitude is real and non-negative.
SpinVector coherent_state(SpinMagnitude j, double theta, double phi);

QuantumState product_state(const SpinVector& spin_s, const SpinVector& spin_l);

/// Partial trace over H_s.
ReducedDensity reduced_density_l(const QuantumState& state);
/// Partial trace over H_l.
ReducedDensity reduced_density_s(const QuantumState& state);

/// Mean and variance of a component of S or L. x-moments go through the
/// J_x eigenbasis, y-moments through the ladder operators.
Moments spin_moments(const QuantumState& state, Factor which, Axis axis);
Moments spin_moments(const SpinVector& spin, Axis axis);

/// Applies J_y to a single-spin vector (ladder form, no dense matrix).
Eigen::VectorXcd apply_jy(SpinMagnitude j, const Eigen::VectorXcd& v);

}  // namespace kicktops
