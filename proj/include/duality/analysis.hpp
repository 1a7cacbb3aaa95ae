#pragma once

#include <vector>

#include "duality/detector.hpp"
#include "duality/geometry.hpp"
#include "duality/pattern.hpp"

namespace duality {

/// Result of fringe-contrast extraction. Positions and values refer to the
/// envelope-flattened profile (see extract_visibility).
struct Visibility {
    double value;      ///< (Fmax - Fmin)/(Fmax + Fmin), 0 when no fringes
    bool no_fringes;   ///< set when the profile has no interior extrema
    double x_max;      ///< refined abscissa of the central maximum
    double x_min;      ///< refined abscissa of the adjacent minimum
    double f_max;      ///< refined flattened value at the maximum
    double f_min;      ///< refined flattened value at the minimum
};

/// Measure fringe visibility from a sampled pattern.
///
/// The raw two-point contrast of neighbouring extrema is biased upward by
/// the Gaussian envelope falling off between a maximum and the adjacent
/// minimum (enough to push it above |<d1|d2>| for far-field geometries),
/// so the sampled intensities are first divided by the ov-independent
/// incoherent envelope computed from the pattern metadata. On the
/// flattened profile 1 + |ov| cos(...)/cosh(...) the two-point definition
/// reproduces the closed-form visibility |ov|/cosh.
///
/// Extrema are located by a 3-point discrete test within |x| <= 2 fringe
/// widths of center, then refined by quadratic interpolation; the contrast
/// uses the maximum closest to x = 0 and the nearest minimum. A profile
/// without interior extrema yields {0, no_fringes = true}.
Visibility extract_visibility(const Pattern& pattern);

/// Closed-form visibility |ov| / cosh(x_star d / 2 sigma_t^2), with x_star
/// the abscissa the measurement is quoted at (callers typically pass the
/// midpoint of the measured extrema pair).
double theoretical_visibility(const SlitGeometry& geom, Complex ov, double x_star);

/// Mean spacing between adjacent refined maxima of the flattened profile
/// within 2.5 fringe widths of center. Averaging consecutive gaps around
/// x = 0 cancels the first-order envelope pull on the peak positions.
/// Throws DegeneratePatternError when fewer than two maxima exist.
double measured_fringe_spacing(const Pattern& pattern);

/// One experiment configuration's wave/particle bookkeeping.
struct DualityReport {
    double visibility;          ///< V, measured from the synthesized pattern
    double distinguishability;  ///< D = sqrt(1 - |<d1|d2>|^2)
    double delta_p2;            ///< Var(P) on d1
    double delta_q2;            ///< Var(Q) on d1
    double v2_plus_d2;          ///< V^2 + D^2
    double bound_residual;      ///< 1 - V^2 - D^2, >= -1e-9
};

/// Synthesize the pattern for a correlated detector pair, extract V, and
/// verify the duality bound V^2 + D^2 <= 1 together with the
/// sum-uncertainty relation Var(P) + Var(Q) >= 1. For pairs with real
/// coefficient structure the tighter bound
/// V^2 + D^2 <= 2 - [Var(P) + Var(Q)] is checked as well.
DualityReport duality_report(const SlitGeometry& geom, const DetectorState& d1,
                             const DetectorState& d2, const GridSpec& grid);

/// As above on recommended_grid(geom).
DualityReport duality_report(const SlitGeometry& geom, const DetectorState& d1,
                             const DetectorState& d2);

/// Reports for real coefficient pairs c1 in [1/sqrt(2), 1] (c2 = sqrt(1 -
/// c1^2)), sweeping from no which-way information (D = 0) to full (D = 1).
/// D is non-decreasing and measured V non-increasing along the result.
std::vector<DualityReport> duality_sweep(const SlitGeometry& geom, std::size_t n_steps);

}  // namespace duality
