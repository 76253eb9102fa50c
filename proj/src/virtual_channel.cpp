// SPDX-License-Identifier: Apache-2.0
#include "mmwloc/virtual_channel.hpp"

#include <cmath>

#include "mmwloc/errors.hpp"

namespace mmwloc {

std::vector<SelectionIndex> selection_indices(int n_sub) {
    std::vector<SelectionIndex> idx;
    idx.reserve(n_sub);
    for (int i = 1; i <= n_sub; ++i) {
        idx.push_back(SelectionIndex{i, (i + 1) / 2, 1 + i / 2, i});
    }
    return idx;
}

VirtualChannel::VirtualChannel(std::vector<MatC> distinct_blocks, const SystemConfig& cfg) {
    if (static_cast<int>(distinct_blocks.size()) != cfg.n_sub)
        throw DimensionError("need N_s distinct blocks");
    for (const auto& b : distinct_blocks)
        if (b.rows() != cfg.n_rx || b.cols() != cfg.n_tx)
            throw DimensionError("block shape != N_r x N_t");
    blocks_ = std::move(distinct_blocks);
    n_rx_ = cfg.n_rx;
    n_tx_ = cfg.n_tx;
}

VirtualChannel VirtualChannel::from_matrix(const MatC& hv, const SystemConfig& cfg,
                                           double rel_tol) {
    const int r1 = cfg.half_sub();
    if (hv.rows() != r1 * cfg.n_rx || hv.cols() != r1 * cfg.n_tx)
        throw DimensionError("virtual matrix shape mismatch");
    const double scale = std::max(hv.norm(), 1e-300);
    std::vector<MatC> blocks(cfg.n_sub);
    std::vector<int> mult(cfg.n_sub, 0);
    for (auto& b : blocks) b = MatC::Zero(cfg.n_rx, cfg.n_tx);
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < r1; ++j) {
            blocks[i + j] += hv.block(i * cfg.n_rx, j * cfg.n_tx, cfg.n_rx, cfg.n_tx);
            ++mult[i + j];
        }
    for (int n = 0; n < cfg.n_sub; ++n) blocks[n] /= static_cast<double>(mult[n]);
    // Every anti-diagonal must agree with its average.
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < r1; ++j) {
            double dev = (hv.block(i * cfg.n_rx, j * cfg.n_tx, cfg.n_rx, cfg.n_tx) - blocks[i + j])
                             .norm();
            if (dev > rel_tol * scale)
                throw StructureViolationError("matrix is not block-Hankel");
        }
    return VirtualChannel(std::move(blocks), cfg);
}

MatC VirtualChannel::matrix() const {
    const int r1 = (n_sub() + 1) / 2;
    MatC hv(r1 * n_rx_, r1 * n_tx_);
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < r1; ++j)
            hv.block(i * n_rx_, j * n_tx_, n_rx_, n_tx_) = blocks_[i + j];
    return hv;
}

VirtualChannel build_virtual_channel(const PathParams& params, const SystemConfig& cfg) {
    if (cfg.n_sub % 2 == 0) throw UnsupportedConfigError("virtual channel requires odd N_s");
    std::vector<MatC> blocks(cfg.n_sub);
    for (int n = 0; n < cfg.n_sub; ++n) blocks[n] = MatC::Zero(cfg.n_rx, cfg.n_tx);
    const double window = cfg.delay_window();
    for (int k = 0; k < params.n_paths(); ++k) {
        const VecC alpha = steering_vector(cfg.n_rx, spatial_frequency(params.aoa_rad[k], cfg));
        const VecC beta = steering_vector(cfg.n_tx, spatial_frequency(params.aod_rad[k], cfg));
        const MatC outer = params.coeff[k] * (alpha * beta.adjoint());
        for (int n = 0; n < cfg.n_sub; ++n) {
            const double phase = -kTwoPi * n * params.toa_s[k] / window;
            blocks[n] += cdouble(std::cos(phase), std::sin(phase)) * outer;
        }
    }
    return VirtualChannel(std::move(blocks), cfg);
}

MatC automorphism_g(const VirtualChannel& hv, const SystemConfig& cfg) {
    MatC out = MatC::Zero(cfg.n_sub * cfg.n_rx, cfg.n_sub * cfg.n_tx);
    for (int n = 0; n < cfg.n_sub; ++n)
        out.block(n * cfg.n_rx, n * cfg.n_tx, cfg.n_rx, cfg.n_tx) = hv.blocks()[n];
    return out;
}

MatC apply_g_times_pilots(const VirtualChannel& hv, const MatC& pilots, const SystemConfig& cfg) {
    if (pilots.rows() != cfg.n_sub * cfg.n_tx) throw DimensionError("pilot rows != N_s N_t");
    MatC y(cfg.n_sub * cfg.n_rx, pilots.cols());
    for (int n = 0; n < cfg.n_sub; ++n)
        y.middleRows(n * cfg.n_rx, cfg.n_rx).noalias() =
            hv.blocks()[n] * pilots.middleRows(n * cfg.n_tx, cfg.n_tx);
    return y;
}

MatC adjoint_g_applied(const MatC& m, const SystemConfig& cfg) {
    if (m.rows() != cfg.n_sub * cfg.n_rx || m.cols() != cfg.n_sub * cfg.n_tx)
        throw DimensionError("adjoint input must be (N_s N_r) x (N_s N_t)");
    const int r1 = cfg.half_sub();
    MatC out = MatC::Zero(r1 * cfg.n_rx, r1 * cfg.n_tx);
    for (const auto& sel : selection_indices(cfg.n_sub)) {
        const int i = sel.j1;  // diagonal block index of m (1-based)
        out.block((sel.z1 - 1) * cfg.n_rx, (sel.j2 - 1) * cfg.n_tx, cfg.n_rx, cfg.n_tx) +=
            m.block((i - 1) * cfg.n_rx, (i - 1) * cfg.n_tx, cfg.n_rx, cfg.n_tx);
    }
    return out;
}

MatC adjoint_g_of_outer(const MatC& r, const MatC& pilots, const SystemConfig& cfg) {
    if (r.rows() != cfg.n_sub * cfg.n_rx || pilots.rows() != cfg.n_sub * cfg.n_tx ||
        r.cols() != pilots.cols())
        throw DimensionError("adjoint_g_of_outer shape mismatch");
    const int r1 = cfg.half_sub();
    MatC out = MatC::Zero(r1 * cfg.n_rx, r1 * cfg.n_tx);
    for (const auto& sel : selection_indices(cfg.n_sub)) {
        const int i = sel.j1;
        out.block((sel.z1 - 1) * cfg.n_rx, (sel.j2 - 1) * cfg.n_tx, cfg.n_rx, cfg.n_tx)
            .noalias() += r.middleRows((i - 1) * cfg.n_rx, cfg.n_rx) *
                          pilots.middleRows((i - 1) * cfg.n_tx, cfg.n_tx).adjoint();
    }
    return out;
}

}  // namespace mmwloc
