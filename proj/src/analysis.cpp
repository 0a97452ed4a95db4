#include "kicktops/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kicktops {

namespace {

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("least squares: abscissae are all equal");
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace

double shannon_entropy(const DiscreteDistribution& d)
{
    double h = 0.0;
    for (double p : d.probs) {
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

EntropySeries entropy_series(const std::vector<int>& steps,
                             const std::vector<DiscreteDistribution>& distributions)
{
    if (steps.size() != distributions.size()) {
        throw std::invalid_argument("entropy_series: steps and distributions differ in length");
    }
    EntropySeries out{steps, {}};
    out.h.reserve(distributions.size());
    for (const auto& d : distributions) {
        out.h.push_back(shannon_entropy(d));
    }
    return out;
}

double linear_rate(const std::vector<int>& steps, const std::vector<double>& values, int first,
                   int last)
{
    if (steps.size() != values.size()) {
        throw std::invalid_argument("linear_rate: steps and values differ in length");
    }
    std::vector<double> x, y;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (steps[k] >= first && steps[k] <= last) {
            x.push_back(steps[k]);
            y.push_back(values[k]);
        }
    }
    if (x.size() < 3) {
        throw std::invalid_argument("fit window [" + std::to_string(first) + ", " +
                                    std::to_string(last) + "] holds fewer than 3 points");
    }
    return least_squares(x, y).slope;
}

double width_growth_fit(const std::vector<int>& steps, const std::vector<double>& variances,
                        int first, int last)
{
    std::vector<double> log_width(variances.size());
    for (std::size_t k = 0; k < variances.size(); ++k) {
        if (!(variances[k] > 0.0)) {
            throw std::invalid_argument("width_growth_fit: variances must be positive");
        }
        log_width[k] = 0.5 * std::log(variances[k]);
    }
    return linear_rate(steps, log_width, first, last);
}

QCDifference qc_difference(const DiscreteDistribution& pq, const DiscreteDistribution& pc)
{
    if (pq.range != pc.range || pq.size() != pc.size()) {
        throw std::invalid_argument("qc_difference: label grids differ");
    }
    QCDifference out;
    out.per_bin.resize(pq.size());
    double sum2 = 0.0;
    for (std::size_t k = 0; k < pq.size(); ++k) {
        out.per_bin[k] = pq.probs[k] - pc.probs[k];
        sum2 += out.per_bin[k] * out.per_bin[k];
    }
    const double bins = static_cast<double>(pq.size());
    out.sigma_qc = std::sqrt(sum2 / bins);
    out.relative_sigma = out.sigma_qc * bins;
    return out;
}

ScalingRecord equilibrium_sigma(const DifferenceSeries& series, int first, int last, double size,
                                double relaxation_time)
{
    if (!(size > 0.0)) {
        throw std::invalid_argument("equilibrium_sigma: size must be positive");
    }
    double sum = 0.0;
    int count = 0;
    for (std::size_t k = 0; k < series.steps.size(); ++k) {
        if (series.steps[k] >= first && series.steps[k] <= last) {
            sum += series.values[k];
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument("equilibrium_sigma: no samples in the window");
    }
    ScalingRecord rec{size, sum / count, first, last, {}};
    if (first < relaxation_time) {
        rec.warning = "window starts at n=" + std::to_string(first) +
                      " before the estimated relaxation time " + std::to_string(relaxation_time);
    }
    return rec;
}

LinearFit scaling_fit(const std::vector<ScalingRecord>& records)
{
    if (records.size() < 3) {
        throw std::invalid_argument("scaling_fit: need at least 3 records");
    }
    double lo = records.front().size;
    double hi = lo;
    std::vector<double> x, y;
    for (const auto& r : records) {
        if (!(r.size > 0.0) || !(r.sigma > 0.0)) {
            throw std::invalid_argument("scaling_fit: sizes and sigmas must be positive");
        }
        lo = std::min(lo, r.size);
        hi = std::max(hi, r.size);
        x.push_back(std::log(r.size));
        y.push_back(std::log(r.sigma));
    }
    if (hi < 4.0 * lo) {
        throw std::invalid_argument("scaling_fit: sizes must span at least a factor of 4");
    }
    return least_squares(x, y);
}

RelaxationEstimate relaxation_estimate(double width_exponent, double lyapunov_exponent, double l)
{
    if (!(width_exponent > 0.0) || !(lyapunov_exponent > 0.0)) {
        throw std::invalid_argument("relaxation_estimate: exponents must be positive");
    }
    if (!(l >= 1.0)) {
        throw std::invalid_argument("relaxation_estimate: l must be at least 1");
    }
    const double t_sat = std::log(l) / width_exponent;
    return {width_exponent, t_sat, t_sat + 1.0 / lyapunov_exponent};
}

}  // namespace kicktops
