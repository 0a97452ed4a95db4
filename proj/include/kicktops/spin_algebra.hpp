#pragma once

#include <Eigen/Dense>

#include <vector>

namespace kicktops {

/// Spin quantum number j, stored as 2j so half-integers are exact.
class SpinMagnitude {
public:
    SpinMagnitude() = default;
    explicit SpinMagnitude(int two_j);

    /// Parses 7, 7.0 or 6.5; anything that is not a multiple of 1/2 throws.
    static SpinMagnitude from_value(double j);

    int two_j() const { return two_j_; }
    double value() const { return 0.5 * two_j_; }
    int dim() const { return two_j_ + 1; }

    /// Eigenvalue m attached to basis index k = 0..2j (ascending, m = -j + k).
    double label(int k) const { return -0.5 * two_j_ + k; }
    int two_label(int k) const { return -two_j_ + 2 * k; }

    /// |J| = sqrt(j(j+1)).
    double classical_length() const;

    friend bool operator==(SpinMagnitude, SpinMagnitude) = default;

private:
    int two_j_ = 0;
};

/// Magnetic label m stored as 2m.
struct MagneticLabel {
    int two_m = 0;

    double value() const { return 0.5 * two_m; }
    bool valid_for(SpinMagnitude j) const;
    /// Basis index of this label within spin j; throws when invalid.
    int index_in(SpinMagnitude j) const;
};

/// Real symmetric tridiagonal matrix: diagonal of length n, off-diagonal of length n-1.
struct Tridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    Eigen::MatrixXd dense() const;
};

/// <m+1|J_x|m> = sqrt(j(j+1) - m(m+1)) / 2 on the ascending z-basis.
Tridiagonal jx_tridiagonal(SpinMagnitude j);

/// Eigen-decomposition of J_x. Column k of `v` holds the z-basis components of
/// the J_x eigenvector with eigenvalue `eigenvalues[k]` (ascending). J_x is real
/// symmetric, so the vectors are real; in each column the entry of largest
/// magnitude (lowest index among ties) is positive.
struct XBasisTransform {
    SpinMagnitude j;
    Eigen::MatrixXd v;
    std::vector<double> eigenvalues;
};

XBasisTransform x_basis_transform(SpinMagnitude j);

}  // namespace kicktops
