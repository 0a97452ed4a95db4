#pragma once

#include "kicktops/classical.hpp"
#include "kicktops/quantum_states.hpp"
#include "kicktops/spin_algebra.hpp"

#include <string>
#include <vector>

namespace kicktops {

/// Probabilities on the eigenvalue grid m = -J, ..., J of `range` (bins of
/// width 1). Classical histograms also carry the mass that fell outside the
/// grid in `overflow`; quantum distributions always have overflow == 0.
struct DiscreteDistribution {
    SpinMagnitude range;
    std::vector<double> probs;
    double overflow = 0.0;

    std::size_t size() const { return probs.size(); }
    double label(std::size_t k) const { return range.label(static_cast<int>(k)); }
    double total() const;
    double mean() const;
    double variance() const;
};

enum class Observable { Lz, Jz, Lx };

std::string to_string(Observable o);
Observable parse_observable(const std::string& text);

/// Label grid a given observable lives on for spins (s, l).
SpinMagnitude label_range(Observable o, SpinMagnitude s, SpinMagnitude l);

DiscreteDistribution quantum_plz(const QuantumState& state);
/// Anti-diagonal sums of |psi(m_s, m_l)|^2 over m_s + m_l = m_j.
DiscreteDistribution quantum_pjz(const QuantumState& state);
DiscreteDistribution quantum_plx(const QuantumState& state);
/// Same as quantum_plx but reuses a precomputed transform for l.
DiscreteDistribution quantum_plx(const QuantumState& state, const XBasisTransform& xl);
DiscreteDistribution quantum_marginal(const QuantumState& state, Observable o);

/// Histogram of L_z, J_z = S_z + L_z or L_x over bins [m - 1/2, m + 1/2)
/// centred on the eigenvalues in `labels`.
DiscreteDistribution classical_marginal(const Ensemble& ensemble, Observable o,
                                        SpinMagnitude labels);

DiscreteDistribution microcanonical_plz(SpinMagnitude l);
/// Tent-shaped J_z law of the uniform state; symmetric in (s, l).
DiscreteDistribution microcanonical_pjz(SpinMagnitude s, SpinMagnitude l);
/// Microcanonical law for any observable (L_x has the same flat law as L_z).
DiscreteDistribution microcanonical_marginal(Observable o, SpinMagnitude s, SpinMagnitude l);

}  // namespace kicktops
