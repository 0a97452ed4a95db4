#pragma once

#include "kicktops/floquet.hpp"
#include "kicktops/spin_algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

namespace kicktops {

/// Point on S^2 x S^2: directions of the two spins.
struct PhasePoint {
    Eigen::Vector3d s_hat{0.0, 0.0, 1.0};
    Eigen::Vector3d l_hat{0.0, 0.0, 1.0};

    static PhasePoint from_angles(double theta_s, double phi_s, double theta_l, double phi_l);
};

/// Classical spin lengths |S| and |L|.
struct SpinMagnitudes {
    double S = 1.0;
    double L = 1.0;

    /// sqrt(s(s+1)), sqrt(l(l+1)).
    static SpinMagnitudes from_quantum(SpinMagnitude s, SpinMagnitude l);
    /// |S| = 1, |L| = r; enough for runs that never compare with a quantum state.
    static SpinMagnitudes from_ratio(double r);
};

/// Monte-Carlo sample of a Liouville density.
struct Ensemble {
    std::vector<PhasePoint> points;
    SpinMagnitudes magnitudes;
    std::uint64_t seed = 0;
};

/// Density ∝ exp(-2 sin^2(θ/2) / σ²) about +z, rigidly rotated to (θ0, φ0).
struct ClassicalDensityParams {
    double theta0 = 0.0;
    double phi0 = 0.0;
    double sigma2 = 1.0;

    /// σ^{-2} = 2|J|.
    static ClassicalDensityParams matched(double theta0, double phi0, double length);
};

Ensemble sample_ensemble(const ClassicalDensityParams& density_s,
                         const ClassicalDensityParams& density_l, std::size_t count,
                         std::uint64_t seed, SpinMagnitudes magnitudes);

/// Uniform (microcanonical) measure on S^2 x S^2.
Ensemble sample_uniform_ensemble(std::size_t count, std::uint64_t seed, SpinMagnitudes magnitudes);

/// One period: kick (s_hat about x by γ(L/S) l_x, l_hat about x by γ s_x,
/// both with pre-kick values), then precession by `a` about z, then
/// renormalization.
PhasePoint map_step(const PhasePoint& p, const FloquetParams& params, const SpinMagnitudes& mags);

/// Chart used for the canonical coordinates (φ, z) of one spin. `Z` is the
/// usual polar chart; `X` is the same chart after a fixed rotation about y
/// that carries +x to +z, used when |z| > 0.99.
enum class Chart { Z, X };

struct ChartPair {
    Chart s = Chart::Z;
    Chart l = Chart::Z;
};

/// Tangent vector in canonical coordinates (φ_s, z_s, φ_l, z_l).
using Tangent = Eigen::Vector4d;

ChartPair preferred_charts(const PhasePoint& p);

/// Canonical coordinates of p in the given charts.
Tangent canonical_coordinates(const PhasePoint& p, ChartPair charts);
PhasePoint from_canonical(const Tangent& coords, ChartPair charts);

/// Analytic Jacobian of map_step from preferred_charts(p) coordinates at p to
/// preferred_charts(map_step(p)) coordinates at the image.
Eigen::Matrix4d map_jacobian(const PhasePoint& p, const FloquetParams& params,
                             const SpinMagnitudes& mags);

Tangent tangent_step(const PhasePoint& p, const Tangent& delta, const FloquetParams& params,
                     const SpinMagnitudes& mags);

struct LyapunovOptions {
    int steps = 10000;
    int transient = 100;
};

/// Largest Lyapunov exponent by the tangent-vector method with renormalization
/// every step.
double lyapunov(const PhasePoint& p0, const FloquetParams& params, const SpinMagnitudes& mags,
                const LyapunovOptions& options = {});

Ensemble evolve_ensemble(Ensemble ensemble, const FloquetParams& params, int steps);
void evolve_ensemble_inplace(Ensemble& ensemble, const FloquetParams& params, int steps);

}  // namespace kicktops
