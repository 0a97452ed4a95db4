#include "kicktops/spin_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace kicktops {

SpinMagnitude::SpinMagnitude(int two_j) : two_j_(two_j)
{
    if (two_j < 0) {
        throw std::invalid_argument("spin magnitude must be non-negative, got 2j = " +
                                    std::to_string(two_j));
    }
}

SpinMagnitude SpinMagnitude::from_value(double j)
{
    const double twice = 2.0 * j;
    const double rounded = std::round(twice);
    if (!std::isfinite(j) || std::abs(twice - rounded) > 1e-9 || rounded < 0) {
        throw std::invalid_argument("spin magnitude must be a non-negative multiple of 1/2, got " +
                                    std::to_string(j));
    }
    return SpinMagnitude(static_cast<int>(rounded));
}

double SpinMagnitude::classical_length() const
{
    const double j = value();
    return std::sqrt(j * (j + 1.0));
}

bool MagneticLabel::valid_for(SpinMagnitude j) const
{
    return std::abs(two_m) <= j.two_j() && (two_m - j.two_j()) % 2 == 0;
}

int MagneticLabel::index_in(SpinMagnitude j) const
{
    if (!valid_for(j)) {
        throw std::invalid_argument("label 2m = " + std::to_string(two_m) +
                                    " is not valid for 2j = " + std::to_string(j.two_j()));
    }
    return (two_m + j.two_j()) / 2;
}

Eigen::MatrixXd Tridiagonal::dense() const
{
    const auto n = static_cast<Eigen::Index>(diagonal.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        m(k, k) = diagonal[k];
    }
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        m(k + 1, k) = off_diagonal[k];
        m(k, k + 1) = off_diagonal[k];
    }
    return m;
}

Tridiagonal jx_tridiagonal(SpinMagnitude j)
{
    const int n = j.dim();
    const double jj = j.value() * (j.value() + 1.0);
    Tridiagonal t;
    t.diagonal.assign(n, 0.0);
    t.off_diagonal.resize(n > 0 ? n - 1 : 0);
    for (int k = 0; k + 1 < n; ++k) {
        const double m = j.label(k);
        t.off_diagonal[k] = 0.5 * std::sqrt(jj - m * (m + 1.0));
    }
    return t;
}

XBasisTransform x_basis_transform(SpinMagnitude j)
{
    const Tridiagonal t = jx_tridiagonal(j);
    const Eigen::Index n = j.dim();

    XBasisTransform out;
    out.j = j;
    if (n == 1) {
        out.v = Eigen::MatrixXd::Ones(1, 1);
        out.eigenvalues = {0.0};
        return out;
    }

    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(t.diagonal.data(), n);
    Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(t.off_diagonal.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("J_x eigensolver did not converge for 2j = " +
                                 std::to_string(j.two_j()));
    }

    out.v = solver.eigenvectors();
    out.eigenvalues.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues[k] = solver.eigenvalues()(k);

        auto col = out.v.col(k);
        const double peak = col.cwiseAbs().maxCoeff();
        Eigen::Index pivot = 0;
        while (std::abs(col(pivot)) < peak * (1.0 - 1e-8)) {
            ++pivot;
        }
        if (col(pivot) < 0.0) {
            col = -col;
        }
    }
    return out;
}

}  // namespace kicktops
