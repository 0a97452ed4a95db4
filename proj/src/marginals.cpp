#include "kicktops/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace kicktops {

double DiscreteDistribution::total() const
{
    return std::accumulate(probs.begin(), probs.end(), 0.0) + overflow;
}

double DiscreteDistribution::mean() const
{
    double m = 0.0;
    double w = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        m += probs[k] * label(k);
        w += probs[k];
    }
    return w > 0.0 ? m / w : 0.0;
}

double DiscreteDistribution::variance() const
{
    const double mu = mean();
    double v = 0.0;
    double w = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double d = label(k) - mu;
        v += probs[k] * d * d;
        w += probs[k];
    }
    return w > 0.0 ? v / w : 0.0;
}

std::string to_string(Observable o)
{
    switch (o) {
    case Observable::Lz: return "lz";
    case Observable::Jz: return "jz";
    case Observable::Lx: return "lx";
    }
    return "?";
}

Observable parse_observable(const std::string& text)
{
    if (text == "lz") return Observable::Lz;
    if (text == "jz") return Observable::Jz;
    if (text == "lx") return Observable::Lx;
    throw std::invalid_argument("unknown observable '" + text + "' (expected lz, jz or lx)");
}

SpinMagnitude label_range(Observable o, SpinMagnitude s, SpinMagnitude l)
{
    return o == Observable::Jz ? SpinMagnitude(s.two_j() + l.two_j()) : l;
}

DiscreteDistribution quantum_plz(const QuantumState& state)
{
    DiscreteDistribution d{state.l, std::vector<double>(state.l.dim(), 0.0), 0.0};
    for (Eigen::Index i = 0; i < state.amps.rows(); ++i) {
        for (Eigen::Index k = 0; k < state.amps.cols(); ++k) {
            d.probs[k] += std::norm(state.amps(i, k));
        }
    }
    return d;
}

DiscreteDistribution quantum_pjz(const QuantumState& state)
{
    const SpinMagnitude range(state.s.two_j() + state.l.two_j());
    DiscreteDistribution d{range, std::vector<double>(range.dim(), 0.0), 0.0};
    for (Eigen::Index i = 0; i < state.amps.rows(); ++i) {
        for (Eigen::Index k = 0; k < state.amps.cols(); ++k) {
            d.probs[i + k] += std::norm(state.amps(i, k));
        }
    }
    return d;
}

DiscreteDistribution quantum_plx(const QuantumState& state, const XBasisTransform& xl)
{
    if (xl.j != state.l) {
        throw std::invalid_argument("quantum_plx: transform does not match spin l");
    }
    QuantumState rotated{state.s, state.l, state.amps * xl.v};
    return quantum_plz(rotated);
}

DiscreteDistribution quantum_plx(const QuantumState& state)
{
    return quantum_plx(state, x_basis_transform(state.l));
}

DiscreteDistribution quantum_marginal(const QuantumState& state, Observable o)
{
    switch (o) {
    case Observable::Lz: return quantum_plz(state);
    case Observable::Jz: return quantum_pjz(state);
    case Observable::Lx: return quantum_plx(state);
    }
    throw std::logic_error("unknown observable");
}

DiscreteDistribution classical_marginal(const Ensemble& ensemble, Observable o,
                                        SpinMagnitude labels)
{
    const double S = ensemble.magnitudes.S;
    const double L = ensemble.magnitudes.L;
    const std::int64_t bins = labels.dim();
    const double lowest = -labels.value();
    std::vector<std::uint64_t> counts(bins, 0);
    std::uint64_t outside = 0;
    for (const PhasePoint& p : ensemble.points) {
        double v = 0.0;
        switch (o) {
        case Observable::Lz: v = L * p.l_hat.z(); break;
        case Observable::Jz: v = S * p.s_hat.z() + L * p.l_hat.z(); break;
        case Observable::Lx: v = L * p.l_hat.x(); break;
        }
        const double k = std::floor(v - lowest + 0.5);
        if (k < 0.0 || k >= static_cast<double>(bins)) {
            ++outside;
        } else {
            ++counts[static_cast<std::size_t>(k)];
        }
    }
    const double n = static_cast<double>(ensemble.points.size());
    DiscreteDistribution d{labels, std::vector<double>(bins), static_cast<double>(outside) / n};
    for (std::int64_t k = 0; k < bins; ++k) {
        d.probs[k] = static_cast<double>(counts[k]) / n;
    }
    return d;
}

DiscreteDistribution microcanonical_plz(SpinMagnitude l)
{
    return {l, std::vector<double>(l.dim(), 1.0 / l.dim()), 0.0};
}

DiscreteDistribution microcanonical_pjz(SpinMagnitude s, SpinMagnitude l)
{
    if (s.two_j() > l.two_j()) {
        std::swap(s, l);
    }
    const SpinMagnitude range(s.two_j() + l.two_j());
    const double total = static_cast<double>(s.dim()) * l.dim();
    DiscreteDistribution d{range, std::vector<double>(range.dim()), 0.0};
    // Work in doubled units: 2|m_j| >= 2(l - s) is the sloped part of the tent.
    const int two_gap = l.two_j() - s.two_j();
    for (int k = 0; k < range.dim(); ++k) {
        const int two_mj = std::abs(range.two_label(k));
        if (two_mj >= two_gap) {
            // (l + s + 1 - |m_j|) pairs
            d.probs[k] = (0.5 * (l.two_j() + s.two_j() + 2 - two_mj)) / total;
        } else {
            d.probs[k] = 1.0 / l.dim();
        }
    }
    return d;
}

DiscreteDistribution microcanonical_marginal(Observable o, SpinMagnitude s, SpinMagnitude l)
{
    return o == Observable::Jz ? microcanonical_pjz(s, l) : microcanonical_plz(l);
}

}  // namespace kicktops
