// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "mmwloc/common.hpp"
#include "mmwloc/geometry.hpp"
#include "mmwloc/rng.hpp"
#include "mmwloc/system_config.hpp"

namespace mmwloc {

/// Stacked pilot observation Y = g(H_v) X + W of shape (N_s N_r) x G,
/// together with the pilots that produced it.
struct Observation {
    MatC y;            ///< (N_s N_r) x G
    MatC x;            ///< (N_s N_t) x G
    double noise_var = 0.0;
    std::uint64_t seed = 0;
};

/// Unit-norm Fourier vector a_n(delta): entry m is exp(-j 2 pi m delta) / sqrt(n).
VecC steering_vector(int n, double delta);

/// Normalized spatial frequency d sin(theta) / lambda_c folded into (-1/2, 1/2].
double spatial_frequency(double theta_rad, const SystemConfig& cfg);

/// Normalized delay frequency tau / (N_s T_s), folded into (0, 1].
double delay_frequency(double tau_s, const SystemConfig& cfg);

/// Geometric map from scenario geometry to per-path TOA/AOD/AOA. A positive
/// sync_error_s shifts every TOA (synthesis-side model mismatch experiments).
/// Coefficients are left empty.
PathParams derive_path_params(const ScenarioGeometry& geometry, const SystemConfig& cfg,
                              double sync_error_s = 0.0);

/// Free-space channel coefficients gamma_k = sqrt(Nt Nr) h_k / sqrt(rho_k) with
/// rho_k = (4 pi D_k / lambda)^2. The LOS gain h_0 is a random unit phase; NLOS
/// gains carry a fixed 0.7 reflection attenuation times a random phase.
std::vector<cdouble> free_space_coefficients(const ScenarioGeometry& geometry,
                                             const SystemConfig& cfg, std::uint64_t gain_seed);

/// Per-subcarrier channel matrix H^(n), N_r x N_t.
MatC subcarrier_channel(const PathParams& params, int n, const SystemConfig& cfg);

/// Random unit-modulus pilot matrix of shape (N_s N_t) x G.
MatC generate_pilots(const SystemConfig& cfg, std::uint64_t seed);

/// Stacked noiseless signal g(H_v) X, i.e. blocks H^(n) X^(n), (N_s N_r) x G.
MatC stacked_signal(const PathParams& params, const MatC& pilots, const SystemConfig& cfg);

/// Noise level sigma such that E||W||_F^2 = ||H X||_F^2 / 10^(SNR/10).
double snr_to_sigma(const MatC& h_times_x, double target_snr_db);

/// Y = g(H_v) X + W with W entries iid CN(0, sigma^2).
Observation synthesize_observation(const PathParams& params, const MatC& pilots,
                                   double noise_var, std::uint64_t seed,
                                   const SystemConfig& cfg);

}  // namespace mmwloc
