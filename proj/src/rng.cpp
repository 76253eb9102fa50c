// SPDX-License-Identifier: Apache-2.0
#include "mmwloc/rng.hpp"

#include <cmath>

namespace mmwloc {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

// SplitMix64 finalizer, used to spread user seeds over the key space.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               std::uint32_t key0, std::uint32_t key1) {
    std::uint32_t x0 = counter[0], x1 = counter[1], x2 = counter[2], x3 = counter[3];
    std::uint32_t k0 = key0, k1 = key1;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, x0, hi0, lo0);
        mulhilo(kPhiloxM1, x2, hi1, lo1);
        std::uint32_t y0 = hi1 ^ x1 ^ k0;
        std::uint32_t y1 = lo1;
        std::uint32_t y2 = hi0 ^ x3 ^ k1;
        std::uint32_t y3 = lo0;
        x0 = y0;
        x1 = y1;
        x2 = y2;
        x3 = y3;
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return {x0, x1, x2, x3};
}

RandomStream::RandomStream(std::uint64_t master_seed, RngStream stream, std::uint64_t substream) {
    std::uint64_t key = mix64(master_seed);
    key0_ = static_cast<std::uint32_t>(key);
    key1_ = static_cast<std::uint32_t>(key >> 32);
    std::uint64_t lane = mix64((static_cast<std::uint64_t>(stream) << 32) ^ substream);
    ctr2_ = static_cast<std::uint32_t>(lane);
    ctr3_ = static_cast<std::uint32_t>(lane >> 32);
}

void RandomStream::refill() {
    std::array<std::uint32_t, 4> ctr = {static_cast<std::uint32_t>(draw_),
                                        static_cast<std::uint32_t>(draw_ >> 32), ctr2_, ctr3_};
    buf_ = Philox4x32::block(ctr, key0_, key1_);
    ++draw_;
    buf_pos_ = 0;
}

std::uint32_t RandomStream::next_u32() {
    if (buf_pos_ >= 4) refill();
    return buf_[buf_pos_++];
}

std::uint64_t RandomStream::next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RandomStream::uniform() {
    // 53 random bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open_low() {
    return 1.0 - uniform();
}

double RandomStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform_open_low();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> RandomStream::unit_phase() {
    double phi = 2.0 * 3.14159265358979323846 * uniform();
    return {std::cos(phi), std::sin(phi)};
}

std::complex<double> RandomStream::complex_gaussian(double sigma) {
    double s = sigma * 0x1.6a09e667f3bcdp-1;  // sigma / sqrt(2)
    return {s * gaussian(), s * gaussian()};
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t point_index,
                                std::uint64_t trial_index) {
    std::uint64_t h = mix64(master_seed ^ 0xA5A5A5A5A5A5A5A5ull);
    h = mix64(h ^ (point_index * 0x9E3779B97F4A7C15ull));
    h = mix64(h ^ (trial_index + 0x0123456789ABCDEFull));
    return h;
}

}  // namespace mmwloc
