// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace mmwloc {

using cdouble = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using VecR = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + kPi, kTwoPi);
    if (a <= 0.0) a += kTwoPi;
    return a - kPi;
}

/// Fold a normalized frequency into (-1/2, 1/2].
inline double fold_half(double f) {
    f = f - std::floor(f + 0.5);
    if (f <= -0.5) f += 1.0;
    return f;
}

/// Fold a normalized frequency into (0, 1].
inline double fold_unit(double f) {
    f = f - std::floor(f);
    if (f <= 0.0) f += 1.0;
    return f;
}

/// Circular distance on the unit torus of normalized frequencies.
inline double circular_distance(double a, double b) {
    double d = std::abs(fold_half(a - b));
    return d;
}

}  // namespace mmwloc
