// SPDX-License-Identifier: Apache-2.0
#include "mmwloc/signal_model.hpp"

#include <cmath>

namespace mmwloc {

VecC steering_vector(int n, double delta) {
    if (n < 1) throw DimensionError("steering vector length must be >= 1");
    VecC a(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < n; ++m) {
        double phase = -kTwoPi * m * delta;
        a[m] = scale * cdouble(std::cos(phase), std::sin(phase));
    }
    return a;
}

double spatial_frequency(double theta_rad, const SystemConfig& cfg) {
    return fold_half(cfg.spacing() * std::sin(theta_rad) / cfg.wavelength());
}

double delay_frequency(double tau_s, const SystemConfig& cfg) {
    return fold_unit(tau_s / cfg.delay_window());
}

PathParams derive_path_params(const ScenarioGeometry& geometry, const SystemConfig& cfg,
                              double sync_error_s) {
    geometry.validate();
    const Vec2 q = geometry.bs_pos;
    const Vec2 p = geometry.target_pos;
    const double theta_o = geometry.orientation_rad;
    const int n_paths = geometry.n_paths();

    PathParams params;
    params.toa_s.resize(n_paths);
    params.aod_rad.resize(n_paths);
    params.aoa_rad.resize(n_paths);

    params.toa_s[0] = (p - q).norm() / cfg.c_mps + sync_error_s;
    params.aod_rad[0] = std::atan2(p.y() - q.y(), p.x() - q.x());
    params.aoa_rad[0] = kPi + params.aod_rad[0] - theta_o;
    for (int k = 1; k < n_paths; ++k) {
        const Vec2 s = geometry.scatterers[k - 1];
        params.toa_s[k] = ((q - s).norm() + (p - s).norm()) / cfg.c_mps + sync_error_s;
        params.aod_rad[k] = std::atan2(s.y() - q.y(), s.x() - q.x());
        params.aoa_rad[k] = kPi + std::atan2(p.y() - s.y(), p.x() - s.x()) - theta_o;
    }
    for (int k = 0; k < n_paths; ++k) {
        if (!(params.toa_s[k] > 0.0 && params.toa_s[k] < cfg.delay_window()))
            throw OutOfRangeError("path TOA outside (0, N_s T_s)");
        params.aoa_rad[k] = wrap_angle(params.aoa_rad[k]);
        params.aod_rad[k] = wrap_angle(params.aod_rad[k]);
    }
    return params;
}

std::vector<cdouble> free_space_coefficients(const ScenarioGeometry& geometry,
                                             const SystemConfig& cfg, std::uint64_t gain_seed) {
    geometry.validate();
    RandomStream gains(gain_seed, RngStream::Gains);
    const double lambda = cfg.wavelength();
    const double amp = std::sqrt(static_cast<double>(cfg.n_tx) * cfg.n_rx);
    const int n_paths = geometry.n_paths();

    std::vector<cdouble> gamma(n_paths);
    for (int k = 0; k < n_paths; ++k) {
        double total_dist;
        double h_mag;
        if (k == 0) {
            total_dist = (geometry.target_pos - geometry.bs_pos).norm();
            h_mag = 1.0;
        } else {
            const Vec2 s = geometry.scatterers[k - 1];
            total_dist = (geometry.bs_pos - s).norm() + (geometry.target_pos - s).norm();
            h_mag = 0.7;  // reflection attenuation, fixed magnitude for reproducible RMSE curves
        }
        const double sqrt_rho = 4.0 * kPi * total_dist / lambda;
        gamma[k] = amp * h_mag / sqrt_rho * gains.unit_phase();
    }
    return gamma;
}

MatC subcarrier_channel(const PathParams& params, int n, const SystemConfig& cfg) {
    if (n < 0 || n >= cfg.n_sub) throw DimensionError("subcarrier index out of range");
    MatC h = MatC::Zero(cfg.n_rx, cfg.n_tx);
    const double window = cfg.delay_window();
    for (int k = 0; k < params.n_paths(); ++k) {
        const double phase = -kTwoPi * n * params.toa_s[k] / window;
        const cdouble rot(std::cos(phase), std::sin(phase));
        const VecC alpha = steering_vector(cfg.n_rx, spatial_frequency(params.aoa_rad[k], cfg));
        const VecC beta = steering_vector(cfg.n_tx, spatial_frequency(params.aod_rad[k], cfg));
        h.noalias() += (params.coeff[k] * rot) * (alpha * beta.adjoint());
    }
    return h;
}

MatC generate_pilots(const SystemConfig& cfg, std::uint64_t seed) {
    RandomStream pilots(seed, RngStream::Pilots);
    MatC x(cfg.n_sub * cfg.n_tx, cfg.n_pilots);
    // Column-major fill keeps the draw order independent of Eigen internals.
    for (int g = 0; g < x.cols(); ++g)
        for (int i = 0; i < x.rows(); ++i) x(i, g) = pilots.unit_phase();
    return x;
}

MatC stacked_signal(const PathParams& params, const MatC& pilots, const SystemConfig& cfg) {
    if (pilots.rows() != cfg.n_sub * cfg.n_tx) throw DimensionError("pilot rows != N_s N_t");
    MatC y(cfg.n_sub * cfg.n_rx, pilots.cols());
    for (int n = 0; n < cfg.n_sub; ++n) {
        const MatC h = subcarrier_channel(params, n, cfg);
        y.middleRows(n * cfg.n_rx, cfg.n_rx).noalias() =
            h * pilots.middleRows(n * cfg.n_tx, cfg.n_tx);
    }
    return y;
}

double snr_to_sigma(const MatC& h_times_x, double target_snr_db) {
    const double signal = h_times_x.norm();
    if (signal <= 0.0) throw DimensionError("zero signal matrix in snr_to_sigma");
    const double entries = static_cast<double>(h_times_x.rows()) * h_times_x.cols();
    return signal / std::sqrt(entries * std::pow(10.0, target_snr_db / 10.0));
}

Observation synthesize_observation(const PathParams& params, const MatC& pilots,
                                   double noise_var, std::uint64_t seed,
                                   const SystemConfig& cfg) {
    Observation obs;
    obs.x = pilots;
    obs.noise_var = noise_var;
    obs.seed = seed;
    obs.y = stacked_signal(params, pilots, cfg);
    if (noise_var > 0.0) {
        RandomStream noise(seed, RngStream::Noise);
        const double sigma = std::sqrt(noise_var);
        for (int g = 0; g < obs.y.cols(); ++g)
            for (int i = 0; i < obs.y.rows(); ++i) obs.y(i, g) += noise.complex_gaussian(sigma);
    }
    return obs;
}

}  // namespace mmwloc
