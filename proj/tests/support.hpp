#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>

#include "duality/detector.hpp"

namespace duality::testing {

/// Coefficient pair uniform on the Bloch sphere (uniform cos(theta), phase
/// uniform), so property sweeps cover the state space without bias.
inline std::pair<Complex, Complex> bloch_uniform_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double cos_theta = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double half = 0.5 * std::acos(cos_theta);
    return {Complex(std::cos(half), 0.0), std::polar(std::sin(half), phi)};
}

/// Real normalized pair (cos a, sin a), a uniform over the circle.
inline std::pair<Complex, Complex> real_uniform_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double a = 2.0 * std::numbers::pi * unit(rng);
    return {Complex(std::cos(a), 0.0), Complex(std::sin(a), 0.0)};
}

inline DetectorState random_state(std::mt19937_64& rng) {
    const auto [c1, c2] = bloch_uniform_pair(rng);
    return DetectorState(c1, c2);
}

}  // namespace duality::testing
