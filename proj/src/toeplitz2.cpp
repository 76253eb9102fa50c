// SPDX-License-Identifier: Apache-2.0
#include "mmwloc/toeplitz2.hpp"

#include <cmath>

#include "mmwloc/errors.hpp"

namespace mmwloc {

static void check_generator(const MatC& gen, int r1, int r2) {
    if (gen.rows() != 2 * r1 - 1 || gen.cols() != 2 * r2 - 1)
        throw InvalidGeneratorError("generator shape must be (2 r1 - 1) x (2 r2 - 1)");
    const double scale = std::max(gen.norm(), 1e-300);
    for (int m = -(r1 - 1); m <= r1 - 1; ++m)
        for (int n = -(r2 - 1); n <= r2 - 1; ++n) {
            const cdouble a = gen(m + r1 - 1, n + r2 - 1);
            const cdouble b = gen(-m + r1 - 1, -n + r2 - 1);
            if (std::abs(a - std::conj(b)) > 1e-12 * scale)
                throw InvalidGeneratorError("generator violates conjugate symmetry");
        }
}

MatC toeplitz2_build(const MatC& gen, int r1, int r2) {
    check_generator(gen, r1, r2);
    MatC t(r1 * r2, r1 * r2);
    for (int a = 0; a < r1; ++a)
        for (int b = 0; b < r1; ++b)
            for (int z = 0; z < r2; ++z)
                for (int zp = 0; zp < r2; ++zp)
                    t(a * r2 + z, b * r2 + zp) = gen(b - a + r1 - 1, zp - z + r2 - 1);
    return t;
}

MatC toeplitz2_adjoint(const MatC& m, int r1, int r2) {
    if (m.rows() != r1 * r2 || m.cols() != r1 * r2)
        throw DimensionError("toeplitz2_adjoint input must be r1 r2 square");
    MatC gen = MatC::Zero(2 * r1 - 1, 2 * r2 - 1);
    for (int a = 0; a < r1; ++a)
        for (int b = 0; b < r1; ++b)
            for (int z = 0; z < r2; ++z)
                for (int zp = 0; zp < r2; ++zp)
                    gen(b - a + r1 - 1, zp - z + r2 - 1) += m(a * r2 + z, b * r2 + zp);
    return gen;
}

MatR toeplitz2_counts(int r1, int r2) {
    MatR counts(2 * r1 - 1, 2 * r2 - 1);
    for (int m = -(r1 - 1); m <= r1 - 1; ++m)
        for (int n = -(r2 - 1); n <= r2 - 1; ++n)
            counts(m + r1 - 1, n + r2 - 1) =
                static_cast<double>((r1 - std::abs(m)) * (r2 - std::abs(n)));
    return counts;
}

double toeplitz2_trace(const MatC& gen, int r1, int r2) {
    return r1 * r2 * gen(r1 - 1, r2 - 1).real();
}

MatC toeplitz2_generator_from_atoms(const std::vector<std::pair<double, double>>& freqs,
                                    const VecR& weights, int r1, int r2) {
    if (static_cast<int>(freqs.size()) != weights.size())
        throw DimensionError("frequency/weight count mismatch");
    MatC gen = MatC::Zero(2 * r1 - 1, 2 * r2 - 1);
    const double norm = 1.0 / (static_cast<double>(r1) * r2);
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        const double f1 = freqs[k].first, f2 = freqs[k].second;
        for (int m = -(r1 - 1); m <= r1 - 1; ++m)
            for (int n = -(r2 - 1); n <= r2 - 1; ++n) {
                const double phase = kTwoPi * (m * f1 + n * f2);
                gen(m + r1 - 1, n + r2 - 1) +=
                    weights[k] * norm * cdouble(std::cos(phase), std::sin(phase));
            }
    }
    return gen;
}

}  // namespace mmwloc
