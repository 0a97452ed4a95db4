#pragma once

#include "kicktops/quantum_states.hpp"
#include "oracles.hpp"

#include <random>

namespace support {

inline kicktops::QuantumState random_state(kicktops::SpinMagnitude s, kicktops::SpinMagnitude l,
                                           std::mt19937_64& rng)
{
    const Eigen::VectorXcd flat = oracle::random_vector(rng, s.dim() * l.dim());
    kicktops::QuantumState out{s, l, kicktops::AmplitudeGrid(s.dim(), l.dim())};
    for (int i = 0; i < s.dim(); ++i) {
        for (int k = 0; k < l.dim(); ++k) {
            out.amps(i, k) = flat(i * l.dim() + k);
        }
    }
    return out;
}

inline Eigen::VectorXcd flatten(const kicktops::QuantumState& state)
{
    Eigen::VectorXcd flat(state.amps.size());
    for (Eigen::Index i = 0; i < state.amps.rows(); ++i) {
        for (Eigen::Index k = 0; k < state.amps.cols(); ++k) {
            flat(i * state.amps.cols() + k) = state.amps(i, k);
        }
    }
    return flat;
}

}  // namespace support
