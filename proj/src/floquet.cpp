#include "kicktops/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kicktops {

void FloquetParams::validate() const
{
    if (!std::isfinite(a) || !std::isfinite(r) || !std::isfinite(gamma)) {
        throw std::invalid_argument("Floquet parameters must be finite");
    }
    if (gamma < 0.0) {
        throw std::invalid_argument("gamma must be non-negative");
    }
    if (r <= 0.0) {
        throw std::invalid_argument("magnitude ratio r must be positive");
    }
}

FloquetOperatorPlan build_plan(SpinMagnitude s, SpinMagnitude l, const FloquetParams& params)
{
    params.validate();
    FloquetOperatorPlan plan;
    plan.s = s;
    plan.l = l;
    plan.params = params;
    const double length_s = s.classical_length();
    plan.coupling = length_s > 0.0 ? params.gamma / length_s : 0.0;
    plan.xs = x_basis_transform(s);
    plan.xl = x_basis_transform(l);

    plan.free_phases.resize(s.dim(), l.dim());
    plan.kick_phases.resize(s.dim(), l.dim());
    for (int i = 0; i < s.dim(); ++i) {
        for (int k = 0; k < l.dim(); ++k) {
            plan.free_phases(i, k) = std::polar(1.0, -params.a * (s.label(i) + l.label(k)));
            plan.kick_phases(i, k) =
                std::polar(1.0, -plan.coupling * plan.xs.eigenvalues[i] * plan.xl.eigenvalues[k]);
        }
    }
    return plan;
}

void apply_step_inplace(QuantumState& state, const FloquetOperatorPlan& plan)
{
    if (state.s != plan.s || state.l != plan.l || state.amps.rows() != plan.s.dim() ||
        state.amps.cols() != plan.l.dim()) {
        throw std::invalid_argument("apply_step: state dimensions (" +
                                    std::to_string(state.amps.rows()) + "x" +
                                    std::to_string(state.amps.cols()) +
                                    ") do not match the plan");
    }
    if (plan.coupling == 0.0) {
        // Kick is the identity; skipping it keeps the L_z marginal free of transform round-off.
        state.amps.array() *= plan.free_phases.array();
        return;
    }
    const Eigen::MatrixXd& vs = plan.xs.v;
    const Eigen::MatrixXd& vl = plan.xl.v;

    // Into the product x-basis: Psi_x = Vs^T Psi Vl.
    AmplitudeGrid tmp = vs.transpose() * state.amps;
    state.amps.noalias() = tmp * vl;
    state.amps.array() *= plan.kick_phases.array();
    // Back to the z-basis: Psi = Vs Psi_x Vl^T.
    tmp.noalias() = vs * state.amps;
    state.amps.noalias() = tmp * vl.transpose();
    state.amps.array() *= plan.free_phases.array();
}

QuantumState apply_step(QuantumState state, const FloquetOperatorPlan& plan)
{
    apply_step_inplace(state, plan);
    return state;
}

std::vector<Snapshot> evolve(const QuantumState& initial, const FloquetOperatorPlan& plan,
                             int steps, std::vector<int> schedule)
{
    if (steps < 0) {
        throw std::invalid_argument("evolve: step count must be non-negative");
    }
    if (schedule.empty()) {
        schedule.push_back(steps);
    }
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
    std::erase_if(schedule, [steps](int n) { return n < 0 || n > steps; });

    std::vector<Snapshot> out;
    out.reserve(schedule.size());
    QuantumState state = initial;
    auto next = schedule.begin();
    for (int n = 0; n <= steps && next != schedule.end(); ++n) {
        if (n > 0) {
            apply_step_inplace(state, plan);
        }
        if (*next == n) {
            out.push_back({n, state});
            ++next;
        }
    }
    return out;
}

}  // namespace kicktops
