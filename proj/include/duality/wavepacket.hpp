#pragma once

#include "duality/detector.hpp"
#include "duality/geometry.hpp"
#include "duality/pattern.hpp"

namespace duality {

struct EvolvedAmplitudes {
    Complex psi1;  ///< packet from the slit at +d/2, 1/sqrt(2) weight folded in
    Complex psi2;  ///< packet from the slit at -d/2
};

/// Closed-form freely evolved slit packets at screen position x:
///   psi_{1,2}(x) = A_t exp(-(x -/+ d/2)^2 / (4 eps^2 + 2 i tau)),
///   A_t = (1/sqrt 2) [sqrt(2 pi) (eps + i tau / 2 eps)]^(-1/2),
/// principal branch of the square root (non-negative real part).
EvolvedAmplitudes evolved_amplitudes(double x, const SlitGeometry& geom);

/// Screen intensity for detector overlap ov = <d1|d2>, compact form:
///   I(x) = 2 amp2 e^{-(x^2+d^2/4)/2 s2} cosh(xd/2 s2)
///          [1 + |ov| cos(x d tau/(4 eps^4 + tau^2) + arg ov) / cosh(xd/2 s2)]
/// with s2 = sigma_t^2. Beyond |xd/2 s2| > 30 the cosh products are
/// evaluated through the dominant exponential so the tails stay finite.
/// Requires |ov| <= 1 (+1e-12); the conditional-pattern callers pass
/// ov = -1 for the shifted branch, so only the magnitude is bounded.
double intensity(double x, const SlitGeometry& geom, Complex ov);

/// The same intensity assembled from the three-term expansion
///   |psi1|^2 + |psi2|^2 + 2 Re[ov conj(psi1) psi2]
/// using evolved_amplitudes. Kept as an independent route; the two must
/// agree pointwise to 1e-12 relative.
double intensity_expanded(double x, const SlitGeometry& geom, Complex ov);

/// Incoherent two-packet envelope, i.e. intensity with ov = 0. This is the
/// ov-independent prefactor of the compact form; the visibility extractor
/// divides it out before measuring fringe contrast.
double envelope_intensity(double x, const SlitGeometry& geom);

/// Sample the screen pattern for a correlated detector pair on the given
/// grid. The grid must cover required_extent(geom); throws CoverageError
/// naming the needed extent otherwise.
Pattern synthesize_pattern(const SlitGeometry& geom, const DetectorState& d1,
                           const DetectorState& d2, const GridSpec& grid);

/// As above but with the overlap supplied directly (used for conditional
/// and marginal patterns, where ov is +/-1 or a real fringe weight).
Pattern synthesize_pattern(const SlitGeometry& geom, Complex ov, const GridSpec& grid);

}  // namespace duality
