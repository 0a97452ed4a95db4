#include "kicktops/classical.hpp"

#include "kicktops/random.hpp"

#include <cmath>
#include <stdexcept>

namespace kicktops {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kChartSwitch = 0.99;

Eigen::Vector3d direction(double theta, double phi)
{
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

inline Eigen::Vector3d rotate_x(const Eigen::Vector3d& v, double c, double s)
{
    return {v.x(), c * v.y() - s * v.z(), s * v.y() + c * v.z()};
}

inline Eigen::Vector3d rotate_z(const Eigen::Vector3d& v, double c, double s)
{
    return {c * v.x() - s * v.y(), s * v.x() + c * v.y(), v.z()};
}

Eigen::Matrix3d rotation_x(double angle)
{
    return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitX()).toRotationMatrix();
}

Eigen::Matrix3d rotation_z(double angle)
{
    return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

// Q = R_y(-pi/2): (x, y, z) -> (-z, y, x), carries +x to +z.
const Eigen::Matrix3d& chart_x_rotation()
{
    static const Eigen::Matrix3d q = (Eigen::Matrix3d() << 0, 0, -1, 0, 1, 0, 1, 0, 0).finished();
    return q;
}

Eigen::Vector3d chart_frame(const Eigen::Vector3d& v, Chart chart)
{
    return chart == Chart::Z ? v : Eigen::Vector3d(chart_x_rotation() * v);
}

// d(unit vector) / d(phi, z) in the chart.
Eigen::Matrix<double, 3, 2> chart_embedding(const Eigen::Vector3d& v, Chart chart)
{
    const Eigen::Vector3d w = chart_frame(v, chart);
    const double rho2 = w.x() * w.x() + w.y() * w.y();
    Eigen::Matrix<double, 3, 2> e;
    e.col(0) << -w.y(), w.x(), 0.0;
    e.col(1) << -w.z() * w.x() / rho2, -w.z() * w.y() / rho2, 1.0;
    if (chart == Chart::X) {
        e = chart_x_rotation().transpose() * e;
    }
    return e;
}

// d(phi, z) / d(unit vector) restricted to the tangent plane.
Eigen::Matrix<double, 2, 3> chart_projection(const Eigen::Vector3d& v, Chart chart)
{
    const Eigen::Vector3d w = chart_frame(v, chart);
    const double rho2 = w.x() * w.x() + w.y() * w.y();
    Eigen::Matrix<double, 2, 3> d;
    d.row(0) << -w.y() / rho2, w.x() / rho2, 0.0;
    d.row(1) << 0.0, 0.0, 1.0;
    if (chart == Chart::X) {
        d = d * chart_x_rotation();
    }
    return d;
}

Chart chart_for(const Eigen::Vector3d& v)
{
    return std::abs(v.z()) > kChartSwitch ? Chart::X : Chart::Z;
}

Eigen::Vector3d sample_direction(const ClassicalDensityParams& p, double x_u, double x_phi)
{
    // u = sin^2(θ/2) has density ∝ exp(-β u) on [0, 1], β = 2/σ².
    const double beta = 2.0 / p.sigma2;
    const double u = -std::log1p(x_u * std::expm1(-beta)) / beta;
    const double cos_t = 1.0 - 2.0 * u;
    const double sin_t = 2.0 * std::sqrt(std::max(0.0, u * (1.0 - u)));
    const double phi = kTwoPi * x_phi;
    const Eigen::Vector3d local(sin_t * std::cos(phi), sin_t * std::sin(phi), cos_t);
    const Eigen::Matrix3d rot =
        (Eigen::AngleAxisd(p.phi0, Eigen::Vector3d::UnitZ()) *
         Eigen::AngleAxisd(p.theta0, Eigen::Vector3d::UnitY()))
            .toRotationMatrix();
    return rot * local;
}

Eigen::Vector3d uniform_direction(double x_z, double x_phi)
{
    const double z = 2.0 * x_z - 1.0;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kTwoPi * x_phi;
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

}  // namespace

PhasePoint PhasePoint::from_angles(double theta_s, double phi_s, double theta_l, double phi_l)
{
    return {direction(theta_s, phi_s), direction(theta_l, phi_l)};
}

SpinMagnitudes SpinMagnitudes::from_quantum(SpinMagnitude s, SpinMagnitude l)
{
    return {s.classical_length(), l.classical_length()};
}

SpinMagnitudes SpinMagnitudes::from_ratio(double r)
{
    if (!(r > 0.0)) {
        throw std::invalid_argument("magnitude ratio must be positive");
    }
    return {1.0, r};
}

ClassicalDensityParams ClassicalDensityParams::matched(double theta0, double phi0, double length)
{
    if (!(length > 0.0)) {
        throw std::invalid_argument("spin length must be positive");
    }
    return {theta0, phi0, 1.0 / (2.0 * length)};
}

Ensemble sample_ensemble(const ClassicalDensityParams& density_s,
                         const ClassicalDensityParams& density_l, std::size_t count,
                         std::uint64_t seed, SpinMagnitudes magnitudes)
{
    if (count == 0) {
        throw std::invalid_argument("ensemble size must be at least 1");
    }
    if (!(density_s.sigma2 > 0.0) || !(density_l.sigma2 > 0.0)) {
        throw std::invalid_argument("density variance must be positive");
    }
    Ensemble e{std::vector<PhasePoint>(count), magnitudes, seed};
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto x = uniform4(seed, static_cast<std::uint64_t>(i), 0);
        e.points[i].s_hat = sample_direction(density_s, x[0], x[1]);
        e.points[i].l_hat = sample_direction(density_l, x[2], x[3]);
    }
    return e;
}

Ensemble sample_uniform_ensemble(std::size_t count, std::uint64_t seed, SpinMagnitudes magnitudes)
{
    if (count == 0) {
        throw std::invalid_argument("ensemble size must be at least 1");
    }
    Ensemble e{std::vector<PhasePoint>(count), magnitudes, seed};
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto x = uniform4(seed, static_cast<std::uint64_t>(i), 0);
        e.points[i].s_hat = uniform_direction(x[0], x[1]);
        e.points[i].l_hat = uniform_direction(x[2], x[3]);
    }
    return e;
}

PhasePoint map_step(const PhasePoint& p, const FloquetParams& params, const SpinMagnitudes& mags)
{
    const double kick_s = params.gamma * (mags.L / mags.S) * p.l_hat.x();
    const double kick_l = params.gamma * p.s_hat.x();
    Eigen::Vector3d s = rotate_x(p.s_hat, std::cos(kick_s), std::sin(kick_s));
    Eigen::Vector3d l = rotate_x(p.l_hat, std::cos(kick_l), std::sin(kick_l));
    const double ca = std::cos(params.a);
    const double sa = std::sin(params.a);
    s = rotate_z(s, ca, sa);
    l = rotate_z(l, ca, sa);
    return {s.normalized(), l.normalized()};
}

ChartPair preferred_charts(const PhasePoint& p)
{
    return {chart_for(p.s_hat), chart_for(p.l_hat)};
}

Tangent canonical_coordinates(const PhasePoint& p, ChartPair charts)
{
    const Eigen::Vector3d ws = chart_frame(p.s_hat, charts.s);
    const Eigen::Vector3d wl = chart_frame(p.l_hat, charts.l);
    return {std::atan2(ws.y(), ws.x()), ws.z(), std::atan2(wl.y(), wl.x()), wl.z()};
}

PhasePoint from_canonical(const Tangent& q, ChartPair charts)
{
    auto build = [](double phi, double z, Chart chart) {
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Eigen::Vector3d w(rho * std::cos(phi), rho * std::sin(phi), z);
        return chart == Chart::Z ? w : Eigen::Vector3d(chart_x_rotation().transpose() * w);
    };
    return {build(q(0), q(1), charts.s), build(q(2), q(3), charts.l)};
}

Eigen::Matrix4d map_jacobian(const PhasePoint& p, const FloquetParams& params,
                             const SpinMagnitudes& mags)
{
    const ChartPair in = preferred_charts(p);
    const double coef_s = params.gamma * (mags.L / mags.S);
    const double coef_l = params.gamma;
    const double kick_s = coef_s * p.l_hat.x();
    const double kick_l = coef_l * p.s_hat.x();
    const Eigen::Matrix3d rx_s = rotation_x(kick_s);
    const Eigen::Matrix3d rx_l = rotation_x(kick_l);
    const Eigen::Vector3d s_kicked = rx_s * p.s_hat;
    const Eigen::Vector3d l_kicked = rx_l * p.l_hat;
    const Eigen::Vector3d ex = Eigen::Vector3d::UnitX();

    // ds' = Rx ds + (x × s') coef_s dl_x,  dl' = Rx dl + (x × l') coef_l ds_x
    Eigen::Matrix<double, 6, 6> kick = Eigen::Matrix<double, 6, 6>::Zero();
    kick.block<3, 3>(0, 0) = rx_s;
    kick.block<3, 3>(3, 3) = rx_l;
    kick.block<3, 1>(0, 3) = coef_s * ex.cross(s_kicked);
    kick.block<3, 1>(3, 0) = coef_l * ex.cross(l_kicked);

    Eigen::Matrix<double, 6, 6> precess = Eigen::Matrix<double, 6, 6>::Zero();
    const Eigen::Matrix3d rz = rotation_z(params.a);
    precess.block<3, 3>(0, 0) = rz;
    precess.block<3, 3>(3, 3) = rz;

    const PhasePoint image = map_step(p, params, mags);
    const ChartPair out = preferred_charts(image);

    Eigen::Matrix<double, 6, 4> embed = Eigen::Matrix<double, 6, 4>::Zero();
    embed.block<3, 2>(0, 0) = chart_embedding(p.s_hat, in.s);
    embed.block<3, 2>(3, 2) = chart_embedding(p.l_hat, in.l);
    Eigen::Matrix<double, 4, 6> project = Eigen::Matrix<double, 4, 6>::Zero();
    project.block<2, 3>(0, 0) = chart_projection(image.s_hat, out.s);
    project.block<2, 3>(2, 3) = chart_projection(image.l_hat, out.l);

    return project * precess * kick * embed;
}

Tangent tangent_step(const PhasePoint& p, const Tangent& delta, const FloquetParams& params,
                     const SpinMagnitudes& mags)
{
    if (!delta.allFinite()) {
        throw std::invalid_argument("tangent_step: tangent vector must be finite");
    }
    return map_jacobian(p, params, mags) * delta;
}

double lyapunov(const PhasePoint& p0, const FloquetParams& params, const SpinMagnitudes& mags,
                const LyapunovOptions& options)
{
    if (options.steps < 1000) {
        throw std::invalid_argument("lyapunov: at least 1000 accumulation steps are required");
    }
    if (options.transient < 0) {
        throw std::invalid_argument("lyapunov: transient must be non-negative");
    }
    PhasePoint p = p0;
    Tangent delta = Tangent::Constant(0.5);
    double log_sum = 0.0;
    const int total = options.transient + options.steps;
    for (int n = 0; n < total; ++n) {
        delta = tangent_step(p, delta, params, mags);
        p = map_step(p, params, mags);
        const double stretch = delta.norm();
        delta /= stretch;
        if (n >= options.transient) {
            log_sum += std::log(stretch);
        }
    }
    return log_sum / options.steps;
}

void evolve_ensemble_inplace(Ensemble& ensemble, const FloquetParams& params, int steps)
{
    if (steps < 0) {
        throw std::invalid_argument("evolve_ensemble: step count must be non-negative");
    }
    const auto n = static_cast<std::int64_t>(ensemble.points.size());
    const SpinMagnitudes mags = ensemble.magnitudes;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        PhasePoint p = ensemble.points[i];
        for (int k = 0; k < steps; ++k) {
            p = map_step(p, params, mags);
        }
        ensemble.points[i] = p;
    }
}

Ensemble evolve_ensemble(Ensemble ensemble, const FloquetParams& params, int steps)
{
    evolve_ensemble_inplace(ensemble, params, steps);
    return ensemble;
}

}  // namespace kicktops
