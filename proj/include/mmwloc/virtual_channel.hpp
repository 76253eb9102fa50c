// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mmwloc/common.hpp"
#include "mmwloc/geometry.hpp"
#include "mmwloc/signal_model.hpp"
#include "mmwloc/system_config.hpp"

namespace mmwloc {

/// Block coordinates of the identity blocks inside the selection matrices
/// Q_{i,1} and Q_{i,2} (1-based, i = 1..N_s). Q_{i,1} carries I at block
/// (j1, z1) = (i, floor((i+1)/2)); Q_{i,2} at (j2, z2) = (1 + floor(i/2), i).
struct SelectionIndex {
    int j1, z1, j2, z2;
};

std::vector<SelectionIndex> selection_indices(int n_sub);

/// Block-Hankel virtual channel matrix, stored through its N_s distinct
/// N_r x N_t blocks. Block (i, j) of the assembled matrix is blocks[i + j - 2],
/// which keeps the Hankel constraint exact by construction.
class VirtualChannel {
  public:
    VirtualChannel() = default;
    VirtualChannel(std::vector<MatC> distinct_blocks, const SystemConfig& cfg);

    /// Validates the block-Hankel structure of a dense matrix (relative
    /// tolerance) and folds it into distinct blocks, averaging anti-diagonals.
    static VirtualChannel from_matrix(const MatC& hv, const SystemConfig& cfg,
                                      double rel_tol = 1e-10);

    const std::vector<MatC>& blocks() const { return blocks_; }
    int n_sub() const { return static_cast<int>(blocks_.size()); }
    int n_rx() const { return n_rx_; }
    int n_tx() const { return n_tx_; }

    /// Assembled ((N_s+1)/2 N_r) x ((N_s+1)/2 N_t) matrix.
    MatC matrix() const;

  private:
    std::vector<MatC> blocks_;
    int n_rx_ = 0, n_tx_ = 0;
};

/// H_v = sum_k l_k (xi(tau_k) (x) alpha_k)(xi(-tau_k) (x) beta_k)^H.
VirtualChannel build_virtual_channel(const PathParams& params, const SystemConfig& cfg);

/// The automorphism g: block-diagonal stacked channel diag(H^(0..N_s-1)),
/// realized by index mapping over the distinct blocks.
MatC automorphism_g(const VirtualChannel& hv, const SystemConfig& cfg);

/// g(H_v) X without materializing the block-diagonal matrix.
MatC apply_g_times_pilots(const VirtualChannel& hv, const MatC& pilots, const SystemConfig& cfg);

/// Adjoint g*: scatters the N_s diagonal blocks of a stacked-shape matrix into
/// the staircase block positions (floor((i+1)/2), 1+floor(i/2)) of a
/// virtual-shaped matrix; satisfies <g(A), M> = <A, adjoint_g_applied(M)>.
MatC adjoint_g_applied(const MatC& m, const SystemConfig& cfg);

/// g*(R X^H) computed from the diagonal blocks R^(n) X^(n)H directly.
MatC adjoint_g_of_outer(const MatC& r, const MatC& pilots, const SystemConfig& cfg);

}  // namespace mmwloc
