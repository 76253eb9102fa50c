// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "mmwloc/common.hpp"
#include "mmwloc/errors.hpp"

namespace mmwloc {

/// Array, carrier and pilot dimensions of one MIMO-OFDM link. All other
/// modules take their sizes from here.
struct SystemConfig {
    int n_tx = 16;                    ///< transmit antennas N_t
    int n_rx = 16;                    ///< receive antennas N_r
    int n_sub = 15;                   ///< subcarriers N_s (odd)
    int n_pilots = 16;                ///< pilot symbols G
    double carrier_hz = 60e9;         ///< f_c
    double bandwidth_hz = 100e6;      ///< B
    double antenna_spacing_m = -1.0;  ///< d; negative means lambda_c / 2
    double c_mps = kSpeedOfLight;

    double wavelength() const { return c_mps / carrier_hz; }
    double sample_period() const { return 1.0 / bandwidth_hz; }
    /// Largest representable TOA: the delay window N_s * T_s.
    double delay_window() const { return n_sub * sample_period(); }
    double spacing() const { return antenna_spacing_m > 0.0 ? antenna_spacing_m : 0.5 * wavelength(); }
    /// Block-row count (N_s+1)/2 of the virtual channel matrix.
    int half_sub() const { return (n_sub + 1) / 2; }

    /// Throws on inconsistent dimensions; returns true when B/f_c exceeds the
    /// narrowband rule of thumb (caller may warn).
    bool validate() const {
        if (n_tx < 1 || n_rx < 1 || n_pilots < 1) throw DimensionError("antenna/pilot counts must be positive");
        if (n_sub < 3 || n_sub % 2 == 0) throw UnsupportedConfigError("n_sub must be odd and >= 3");
        if (carrier_hz <= 0.0 || bandwidth_hz <= 0.0) throw DimensionError("carrier and bandwidth must be positive");
        if (antenna_spacing_m == 0.0) throw DimensionError("antenna spacing must be nonzero");
        return bandwidth_hz / carrier_hz > 0.05;
    }

    /// Small configuration used by the test suite: N_s=7, N_r=N_t=8, G=8.
    static SystemConfig fast_profile() {
        SystemConfig c;
        c.n_tx = 8;
        c.n_rx = 8;
        c.n_sub = 7;
        c.n_pilots = 8;
        return c;
    }

    /// Benchmark configuration: N_s=15, N_r=N_t=16, G=16 at 60 GHz / 100 MHz.
    static SystemConfig paper_profile() { return SystemConfig{}; }
};

}  // namespace mmwloc
