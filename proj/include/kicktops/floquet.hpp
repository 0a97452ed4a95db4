#pragma once

#include "kicktops/quantum_states.hpp"
#include "kicktops/spin_algebra.hpp"

#include <vector>

namespace kicktops {

/// Parameters of one period of the kicked coupled-top map.
///
/// One period is U = exp(-i a (S_z + L_z)) exp(-i (gamma/|S|) S_x L_x): the
/// impulsive x-x coupling acts first, then both spins precess by `a` about z.
/// `r` is the spin-magnitude ratio |L|/|S|; the quantum map depends on it only
/// through the chosen quantum numbers, while classical-only runs use it to fix
/// the magnitudes.
struct FloquetParams {
    double a = 5.0;
    double r = 1.1;
    double gamma = 1.215;

    void validate() const;
};

/// Precomputed pieces of one period for a given (s, l).
struct FloquetOperatorPlan {
    SpinMagnitude s;
    SpinMagnitude l;
    FloquetParams params;
    /// gamma / |S|, the coefficient of S_x L_x in the kick exponent.
    double coupling = 0.0;
    /// exp(-i a (m_s + m_l)) on the z-basis grid.
    AmplitudeGrid free_phases;
    /// exp(-i coupling mu_s mu_l) on the product J_x eigenbasis grid.
    AmplitudeGrid kick_phases;
    XBasisTransform xs;
    XBasisTransform xl;
};

FloquetOperatorPlan build_plan(SpinMagnitude s, SpinMagnitude l, const FloquetParams& params);

/// psi <- U_free U_kick psi. The kick is applied in the product x-basis as a
/// two-sided real matrix product, so a step costs O(d_s^2 d_l + d_s d_l^2).
void apply_step_inplace(QuantumState& state, const FloquetOperatorPlan& plan);
QuantumState apply_step(QuantumState state, const FloquetOperatorPlan& plan);

struct Snapshot {
    int step = 0;
    QuantumState state;
};

/// Iterates the map `steps` times and returns copies of the state at the
/// requested steps (ascending, duplicates ignored, values > steps dropped).
/// An empty schedule records only the final state.
std::vector<Snapshot> evolve(const QuantumState& initial, const FloquetOperatorPlan& plan,
                             int steps, std::vector<int> schedule = {});

}  // namespace kicktops
