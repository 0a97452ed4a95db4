#include "kicktops/quantum_states.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kicktops {

namespace {

// ln(x^p) with the convention 0^0 = 1; returns -inf for 0^p, p > 0.
double log_power(double x, double p)
{
    if (p == 0.0) {
        return 0.0;
    }
    if (x <= 0.0) {
        return -INFINITY;
    }
    return p * std::log(x);
}

Moments moments_from_probabilities(const Eigen::VectorXd& probs, const std::vector<double>& values)
{
    double mean = 0.0;
    double second = 0.0;
    for (Eigen::Index k = 0; k < probs.size(); ++k) {
        mean += probs(k) * values[k];
        second += probs(k) * values[k] * values[k];
    }
    return {mean, second - mean * mean};
}

std::vector<double> z_labels(SpinMagnitude j)
{
    std::vector<double> labels(j.dim());
    for (int k = 0; k < j.dim(); ++k) {
        labels[k] = j.label(k);
    }
    return labels;
}

}  // namespace

double ReducedDensity::purity() const
{
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
    return rho.squaredNorm();
}

Eigen::VectorXd ReducedDensity::spectrum() const
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double ReducedDensity::von_neumann_entropy() const
{
    double h = 0.0;
    for (double p : spectrum()) {
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

SpinVector coherent_state(SpinMagnitude j, double theta, double phi)
{
    if (!(theta >= 0.0 && theta <= M_PI)) {
        throw std::invalid_argument("coherent_state: theta must lie in [0, pi]");
    }
    const int two_j = j.two_j();
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);

    // ln C(2j, k) by the product recurrence; lgamma differences lose ~1e-13 at j ~ 300.
    std::vector<double> log_mag(j.dim());
    double log_binom = 0.0;
    double peak = -INFINITY;
    for (int k = 0; k < j.dim(); ++k) {
        if (k > 0) {
            log_binom += std::log(static_cast<double>(two_j - k + 1) / k);
        }
        // j + m = k, j - m = 2j - k
        log_mag[k] = 0.5 * log_binom + log_power(c, k) + log_power(s, two_j - k);
        peak = std::max(peak, log_mag[k]);
    }

    SpinVector out{j, Eigen::VectorXcd::Zero(j.dim())};
    for (int k = 0; k < j.dim(); ++k) {
        if (std::isinf(log_mag[k])) {
            continue;
        }
        out.amps(k) = std::polar(std::exp(log_mag[k] - peak), (two_j - k) * phi);
    }
    out.amps /= out.amps.norm();
    return out;
}

QuantumState product_state(const SpinVector& spin_s, const SpinVector& spin_l)
{
    QuantumState out{spin_s.j, spin_l.j, AmplitudeGrid()};
    out.amps = spin_s.amps * spin_l.amps.transpose();
    return out;
}

ReducedDensity reduced_density_l(const QuantumState& state)
{
    // rho(m_l, m_l') = sum_{m_s} psi(m_s, m_l) conj(psi(m_s, m_l'))
    ReducedDensity out{state.l, Eigen::MatrixXcd()};
    out.rho = state.amps.transpose() * state.amps.conjugate();
    return out;
}

ReducedDensity reduced_density_s(const QuantumState& state)
{
    ReducedDensity out{state.s, Eigen::MatrixXcd()};
    out.rho = state.amps * state.amps.adjoint();
    return out;
}

Eigen::VectorXcd apply_jy(SpinMagnitude j, const Eigen::VectorXcd& v)
{
    // J_y = (J_+ - J_-) / 2i with <m+1|J_+|m> = 2 * off(m).
    const Tridiagonal t = jx_tridiagonal(j);
    const int n = j.dim();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    const Complex minus_i(0.0, -1.0);
    for (int k = 0; k + 1 < n; ++k) {
        const double a = t.off_diagonal[k];
        out(k + 1) += minus_i * a * v(k);   // raising part
        out(k) -= minus_i * a * v(k + 1);   // lowering part
    }
    return out;
}

Moments spin_moments(const SpinVector& spin, Axis axis)
{
    const SpinMagnitude j = spin.j;
    switch (axis) {
    case Axis::Z:
        return moments_from_probabilities(spin.amps.cwiseAbs2(), z_labels(j));
    case Axis::X: {
        const XBasisTransform x = x_basis_transform(j);
        const Eigen::VectorXcd in_x = x.v.transpose() * spin.amps;
        return moments_from_probabilities(in_x.cwiseAbs2(), x.eigenvalues);
    }
    case Axis::Y: {
        const Eigen::VectorXcd jy = apply_jy(j, spin.amps);
        const double mean = spin.amps.dot(jy).real();
        return {mean, jy.squaredNorm() - mean * mean};
    }
    }
    throw std::logic_error("unknown axis");
}

Moments spin_moments(const QuantumState& state, Factor which, Axis axis)
{
    const SpinMagnitude j = which == Factor::S ? state.s : state.l;
    switch (axis) {
    case Axis::Z: {
        const Eigen::VectorXd probs = which == Factor::S
                                          ? Eigen::VectorXd(state.amps.cwiseAbs2().rowwise().sum())
                                          : Eigen::VectorXd(state.amps.cwiseAbs2().colwise().sum().transpose());
        return moments_from_probabilities(probs, z_labels(j));
    }
    case Axis::X: {
        const XBasisTransform x = x_basis_transform(j);
        Eigen::VectorXd probs;
        if (which == Factor::S) {
            const AmplitudeGrid rotated = x.v.transpose() * state.amps;
            probs = rotated.cwiseAbs2().rowwise().sum();
        } else {
            const AmplitudeGrid rotated = state.amps * x.v;
            probs = rotated.cwiseAbs2().colwise().sum().transpose();
        }
        return moments_from_probabilities(probs, x.eigenvalues);
    }
    case Axis::Y: {
        // Apply J_y column-by-column (S) or row-by-row (L) and use <A>, <A^2> = |A psi|^2.
        AmplitudeGrid applied(state.amps.rows(), state.amps.cols());
        if (which == Factor::S) {
            for (Eigen::Index c = 0; c < state.amps.cols(); ++c) {
                applied.col(c) = apply_jy(j, state.amps.col(c));
            }
        } else {
            for (Eigen::Index r = 0; r < state.amps.rows(); ++r) {
                applied.row(r) = apply_jy(j, state.amps.row(r).transpose()).transpose();
            }
        }
        const double mean = (state.amps.conjugate().cwiseProduct(applied)).sum().real();
        return {mean, applied.squaredNorm() - mean * mean};
    }
    }
    throw std::logic_error("unknown axis");
}

}  // namespace kicktops
