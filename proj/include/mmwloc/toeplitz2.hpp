// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mmwloc/common.hpp"

namespace mmwloc {

/// Operations on the 2-level block Toeplitz structure T2. A generator is a
/// (2 r1 - 1) x (2 r2 - 1) matrix g with g(m, n) indexed by block offset
/// m in [-(r1-1), r1-1] and in-block offset n in [-(r2-1), r2-1]; the entry of
/// T2 at block (a, b), position (z, z') is g(b - a, z' - z). Hermitian T2
/// requires g(-m, -n) = conj(g(m, n)).

/// Assembled r1 r2 x r1 r2 matrix. Throws InvalidGeneratorError when the
/// generator shape or conjugate symmetry (1e-12 relative) is violated.
MatC toeplitz2_build(const MatC& gen, int r1, int r2);

/// Adjoint of toeplitz2_build: sums matrix entries over each (m, n) offset
/// class back into generator shape.
MatC toeplitz2_adjoint(const MatC& m, int r1, int r2);

/// Number of positions contributing to offset (m, n): (r1-|m|)(r2-|n|),
/// returned in generator layout.
MatR toeplitz2_counts(int r1, int r2);

/// Tr T2(gen) = r1 r2 Re(gen(0,0)) without assembling the matrix.
double toeplitz2_trace(const MatC& gen, int r1, int r2);

/// Generator of sum_k w_k x_k x_k^H where x_k is the unit-norm 2-level
/// exponential with frequencies (f1, f2): gen(m, n) =
/// sum_k w_k exp(+j 2 pi (m f1k + n f2k)) / (r1 r2).
MatC toeplitz2_generator_from_atoms(const std::vector<std::pair<double, double>>& freqs,
                                    const VecR& weights, int r1, int r2);

}  // namespace mmwloc
