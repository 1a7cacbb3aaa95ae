#include "duality/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace duality {

namespace {

constexpr double kCoshSwitch = 30.0;

/// Maximum |ov| accepted as a physical detector overlap.
void check_overlap_magnitude(Complex ov) {
    if (std::abs(ov) > 1.0 + 1e-12) {
        throw DomainError("intensity: |<d1|d2>| = " + std::to_string(std::abs(ov)) +
                          " exceeds 1, unphysical overlap");
    }
}

}  // namespace

EvolvedAmplitudes evolved_amplitudes(double x, const SlitGeometry& geom) {
    geom.validate();
    // Evaluated in long double: the packet phases reach hundreds of
    // radians on wide grids, and double rounding of the exponent would
    // cost ~1e-13 of relative accuracy at fringe minima.
    using CL = std::complex<long double>;
    const long double tau = geom.tau();
    const long double eps = geom.epsilon;
    // A_t = (1/sqrt 2) [sqrt(2 pi) (eps + i tau/2 eps)]^(-1/2), principal branch.
    const CL root_arg = std::sqrt(2.0L * std::numbers::pi_v<long double>) *
                        CL(eps, 0.5L * tau / eps);
    const CL a_t = 1.0L / (std::sqrt(2.0L) * std::sqrt(root_arg));
    const CL denom(4.0L * eps * eps, 2.0L * tau);
    const long double xm = static_cast<long double>(x) - 0.5L * geom.d;
    const long double xp = static_cast<long double>(x) + 0.5L * geom.d;
    const CL psi1 = a_t * std::exp(-xm * xm / denom);
    const CL psi2 = a_t * std::exp(-xp * xp / denom);
    return EvolvedAmplitudes{
        Complex(static_cast<double>(psi1.real()), static_cast<double>(psi1.imag())),
        Complex(static_cast<double>(psi2.real()), static_cast<double>(psi2.imag()))};
}

double intensity(double x, const SlitGeometry& geom, Complex ov) {
    check_overlap_magnitude(ov);
    const SpreadParameters sp = spread(geom);
    const double s2 = sp.sigma_t2;
    const double eps = geom.epsilon;
    const double mag = std::abs(ov);
    const double theta = (mag == 0.0) ? 0.0 : std::arg(ov);

    const double y = x * geom.d / (2.0 * s2);
    // The cosine argument grows linearly across the grid; form it in long
    // double so its rounding stays below the 1e-12 route-equivalence budget.
    const long double e4l = static_cast<long double>(eps) * eps * eps * eps;
    const long double taul = sp.tau;
    const long double ul =
        static_cast<long double>(x) * geom.d * taul / (4.0L * e4l + taul * taul);
    const double cos_term =
        static_cast<double>(std::cos(ul + static_cast<long double>(theta)));
    const double gauss_exp = -(x * x + 0.25 * geom.d * geom.d) / (2.0 * s2);

    if (std::abs(y) <= kCoshSwitch) {
        const double ch = std::cosh(y);
        return 2.0 * sp.amp2 * std::exp(gauss_exp) * ch *
               (1.0 + mag * cos_term / ch);
    }
    // Tail branch: fold the dominant exponential of cosh into the Gaussian
    // so neither factor overflows. gauss_exp + |y| = -(x -/+ d/2)^2 / 2 s2.
    const double env = 0.5 * std::exp(gauss_exp + std::abs(y)) *
                       (1.0 + std::exp(-2.0 * std::abs(y)));
    const double cross = mag * cos_term * std::exp(gauss_exp);
    return 2.0 * sp.amp2 * (env + cross);
}

double intensity_expanded(double x, const SlitGeometry& geom, Complex ov) {
    check_overlap_magnitude(ov);
    const EvolvedAmplitudes amps = evolved_amplitudes(x, geom);
    return std::norm(amps.psi1) + std::norm(amps.psi2) +
           2.0 * (ov * std::conj(amps.psi1) * amps.psi2).real();
}

double envelope_intensity(double x, const SlitGeometry& geom) {
    return intensity(x, geom, Complex(0.0, 0.0));
}

Pattern synthesize_pattern(const SlitGeometry& geom, Complex ov, const GridSpec& grid) {
    geom.validate();
    check_overlap_magnitude(ov);
    const double needed = required_extent(geom);
    if (grid.extent() + 1e-9 < needed) {
        throw CoverageError("synthesize_pattern: grid extent " +
                                std::to_string(grid.extent()) +
                                " is below the required " + std::to_string(needed),
                            needed);
    }
    std::vector<double> xs(grid.n());
    std::vector<double> is(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        xs[i] = grid.position(i);
        is[i] = intensity(xs[i], geom, ov);
    }
    return Pattern(std::move(xs), std::move(is), geom, ov);
}

Pattern synthesize_pattern(const SlitGeometry& geom, const DetectorState& d1,
                           const DetectorState& d2, const GridSpec& grid) {
    return synthesize_pattern(geom, overlap(d1, d2), grid);
}

}  // namespace duality
