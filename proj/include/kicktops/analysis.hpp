#pragma once

#include "kicktops/marginals.hpp"

#include <string>
#include <vector>

namespace kicktops {

/// -Σ p ln p over the labelled bins, 0 ln 0 = 0. Overflow mass is not a bin
/// and is excluded; it stays visible in the distribution itself.
double shannon_entropy(const DiscreteDistribution& d);

struct EntropySeries {
    std::vector<int> steps;
    std::vector<double> h;
};

EntropySeries entropy_series(const std::vector<int>& steps,
                             const std::vector<DiscreteDistribution>& distributions);

/// Least-squares slope of ln(width) = ½ ln(variance) against n over
/// steps in [first, last].
double width_growth_fit(const std::vector<int>& steps, const std::vector<double>& variances,
                        int first, int last);

/// Least-squares slope of y against n over steps in [first, last].
double linear_rate(const std::vector<int>& steps, const std::vector<double>& values, int first,
                   int last);

struct QCDifference {
    std::vector<double> per_bin;  ///< P_q - P_c on the shared labels
    double sigma_qc = 0.0;        ///< RMS of per_bin
    /// sigma_qc in units of the mean bin weight (sigma_qc times the bin count).
    double relative_sigma = 0.0;
};

QCDifference qc_difference(const DiscreteDistribution& pq, const DiscreteDistribution& pc);

/// Per-step (step, value) samples of a difference statistic.
struct DifferenceSeries {
    std::vector<int> steps;
    std::vector<double> values;
};

struct ScalingRecord {
    double size = 0.0;  ///< characteristic action, l
    double sigma = 0.0;
    int window_first = 0;
    int window_last = 0;
    /// Set when the window starts before the estimated relaxation time.
    std::string warning;
};

/// Time-average of `series` over steps in [first, last]. `relaxation_time`
/// only annotates the record when the window starts too early.
ScalingRecord equilibrium_sigma(const DifferenceSeries& series, int first, int last, double size,
                                double relaxation_time = 0.0);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line through (ln size, ln sigma).
LinearFit scaling_fit(const std::vector<ScalingRecord>& records);

struct RelaxationEstimate {
    double width_exponent = 0.0;
    double t_sat = 0.0;
    double t_rel = 0.0;
};

/// t_sat = ln(l) / λ_w and t_rel = t_sat + 1/λ_L.
RelaxationEstimate relaxation_estimate(double width_exponent, double lyapunov_exponent, double l);

}  // namespace kicktops
