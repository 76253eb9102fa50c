// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mmwloc/common.hpp"
#include "mmwloc/errors.hpp"

namespace mmwloc {

/// Planar deployment: base station, target with array orientation, and the
/// scatterer behind each NLOS path. These are the unknowns the pipeline
/// recovers (the BS position is known).
struct ScenarioGeometry {
    Vec2 bs_pos = Vec2::Zero();
    Vec2 target_pos = Vec2(20.0, 5.0);
    double orientation_rad = 0.2;
    std::vector<Vec2> scatterers;

    int n_paths() const { return 1 + static_cast<int>(scatterers.size()); }

    void validate(double min_sep = 1e-9) const {
        if ((target_pos - bs_pos).norm() <= min_sep)
            throw InvalidGeometryError("target coincides with base station");
        for (const auto& s : scatterers) {
            if ((s - bs_pos).norm() <= min_sep || (s - target_pos).norm() <= min_sep)
                throw InvalidGeometryError("scatterer coincides with an endpoint");
        }
    }
};

/// Per-path channel parameters: TOA, AOD, AOA and complex coefficient.
/// Index 0 is the LOS path by convention.
struct PathParams {
    std::vector<double> toa_s;
    std::vector<double> aod_rad;
    std::vector<double> aoa_rad;
    std::vector<cdouble> coeff;

    int n_paths() const { return static_cast<int>(toa_s.size()); }

    /// Scaled coefficient l_k = (N_s+1) gamma_k / 2 of the virtual channel.
    cdouble scaled_coeff(int k, int n_sub) const { return 0.5 * (n_sub + 1) * coeff[k]; }
};

/// Cartesian parameter vector of the localization stage: target position,
/// orientation, scatterer positions. The BS position stays fixed.
struct EtaTilde {
    Vec2 target_pos = Vec2::Zero();
    double orientation_rad = 0.0;
    std::vector<Vec2> scatterers;

    int n_paths() const { return 1 + static_cast<int>(scatterers.size()); }
    int dim() const { return 3 + 2 * static_cast<int>(scatterers.size()); }
};

}  // namespace mmwloc
