// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mmwloc/common.hpp"
#include "mmwloc/system_config.hpp"

namespace mmwloc {

/// Normalized frequency triple of one atom: delta1 = tau / (N_s T_s) in (0, 1],
/// delta2 = d sin(theta_Rx) / lambda and delta3 = d sin(theta_Tx) / lambda in
/// (-1/2, 1/2].
struct FrequencyTriple {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;
};

/// Receiver-side factor chi = xi(delta1) (x) a_{N_r}(delta2), unit norm.
VecC atom_chi(const SystemConfig& cfg, double delta1, double delta2);

/// Transmitter-side factor zeta = xi(-delta1) (x) a_{N_t}(delta3), unit norm.
VecC atom_zeta(const SystemConfig& cfg, double delta1, double delta3);

/// Rank-one atom A(delta, 0) = chi zeta^H of virtual shape.
MatC atom_matrix(const SystemConfig& cfg, const FrequencyTriple& f);

/// Evaluates the trigonometric polynomial <Z, A(delta, 0)> = chi^H Z zeta over
/// grids, folding the delay axis once per delta1 (Z is virtual-shaped).
class DualPolyEvaluator {
  public:
    DualPolyEvaluator(MatC z, const SystemConfig& cfg);

    cdouble value(const FrequencyTriple& f) const;
    double modulus(const FrequencyTriple& f) const;

    /// Z folded along the delay axis at delta1; an N_r x N_t matrix.
    MatC delay_fold(double delta1) const;

    /// max over the full grid n1 x n2 x n3 (delta1 in (0,1], others (-1/2,1/2]).
    double grid_max(int n1, int n2, int n3, FrequencyTriple* argmax = nullptr) const;

    const SystemConfig& config() const { return cfg_; }

  private:
    MatC z_;
    SystemConfig cfg_;
};

/// Dual atomic norm sup |<Z, A(delta, 0)>| by a coarse grid followed by two
/// local refinements (final spacing <= 1e-4 per normalized coordinate).
double dual_atomic_norm(const MatC& z, const SystemConfig& cfg, int coarse = 48,
                        FrequencyTriple* argmax = nullptr);

}  // namespace mmwloc
