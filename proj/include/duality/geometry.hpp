#pragma once

#include "duality/errors.hpp"

namespace duality {

/// Double-slit arrangement, one common arbitrary length unit throughout.
///
/// Masses and times never appear: the only evolution parameter is
/// tau = lambda * L / (2 pi), with dimension length^2, which plays the
/// role of (hbar t / m) for a packet that needs time t_L to reach the
/// screen.
struct SlitGeometry {
    double epsilon;  ///< initial Gaussian half-width of each slit packet
    double d;        ///< slit separation, center to center
    double lambda;   ///< de Broglie wavelength
    double L;        ///< slit-to-screen distance

    /// Effective evolution parameter lambda*L/(2 pi), dimension length^2.
    double tau() const;

    /// Throws DomainError unless all four lengths are finite and positive.
    void validate() const;

    /// True when d <= 4 epsilon, i.e. the packet overlap exp(-d^2/8 eps^2)
    /// is not small and normalization statements pick up visible
    /// corrections. Callers that care should warn.
    bool packets_overlap_significantly() const;
};

/// Geometry used by default throughout the tools: far-field, well-separated
/// slits, fringes comfortably wider than the grid spacing.
inline constexpr SlitGeometry kReferenceGeometry{1.0, 10.0, 1.0, 1000.0};

/// Derived single-packet evolution parameters.
struct SpreadParameters {
    double tau;       ///< lambda*L/(2 pi), length^2
    double sigma_t2;  ///< evolved packet variance eps^2 + (tau/2 eps)^2
    double amp2;      ///< |A_t|^2 = (1/2) (2 pi sigma_t2)^(-1/2), 1/length
};

/// Evolved width and amplitude of each slit packet at the screen.
SpreadParameters spread(const SlitGeometry& geom);

/// Fringe width w = lambda*L/d + 16 pi^2 eps^4 / (lambda d L); equal to
/// 2 pi (tau^2 + 4 eps^4) / (d tau). The cosine in the screen pattern has
/// spatial frequency exactly 2 pi / w.
double fringe_width(const SlitGeometry& geom);

}  // namespace duality
