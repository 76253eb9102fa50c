// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <complex>

namespace mmwloc {

/// Philox4x32-10 keyed counter permutation. Stateless: every 128-bit counter
/// block maps to four 32-bit outputs, so independent streams are carved out of
/// the counter space instead of jumping a stateful generator.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              std::uint32_t key0, std::uint32_t key1);
};

/// Stream identifiers for the independent randomness consumers.
enum class RngStream : std::uint32_t {
    Pilots = 1,
    Gains = 2,
    Noise = 3,
    Scratch = 4,
};

/// One logical random stream: (master seed, stream id, substream) select a
/// disjoint slice of the Philox counter space. Copies restart nothing; the
/// draw position is part of the value.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, RngStream stream, std::uint64_t substream = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform double in (0, 1].
    double uniform_open_low();
    /// Standard normal via Box-Muller.
    double gaussian();
    /// e^{j phi}, phi ~ U[0, 2pi).
    std::complex<double> unit_phase();
    /// CN(0, sigma^2): real and imaginary parts N(0, sigma^2/2) each.
    std::complex<double> complex_gaussian(double sigma);

  private:
    std::uint32_t key0_, key1_;
    std::uint32_t ctr2_, ctr3_;
    std::uint64_t draw_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;

    void refill();
};

/// Deterministic seed for a (point, trial) cell of an experiment, derived by
/// hashing so parallel scheduling cannot change any stream's contents.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t point_index,
                                std::uint64_t trial_index);

}  // namespace mmwloc
