#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "duality/detector.hpp"
#include "duality/geometry.hpp"

namespace duality {

/// Uniform sampling grid on [-extent, extent), the half-open convention
/// shared by the closed-form synthesizer and the spectral propagator so
/// that their samples line up point for point. n must be a power of two,
/// at least 256.
class GridSpec {
  public:
    GridSpec(double extent, std::size_t n);

    double extent() const { return extent_; }
    std::size_t n() const { return n_; }
    double spacing() const { return 2.0 * extent_ / static_cast<double>(n_); }
    double position(std::size_t i) const {
        return -extent_ + static_cast<double>(i) * spacing();
    }

  private:
    double extent_;
    std::size_t n_;
};

/// Smallest half-width a pattern grid must have for the given geometry:
/// d/2 + 6 sigma_t, so both packets keep 6 standard deviations inside the
/// domain at the screen.
double required_extent(const SlitGeometry& geom);

/// Grid suitable for synthesizing and analyzing patterns: covers
/// required_extent with margin and at least 2.75 fringe widths so the
/// central fringes used for visibility are always interior.
GridSpec recommended_grid(const SlitGeometry& geom, std::size_t n = 4096);

/// Screen intensity profile sampled on a uniform grid, with the geometry
/// and detector overlap it was generated from.
class Pattern {
  public:
    Pattern(std::vector<double> xs, std::vector<double> intensities,
            const SlitGeometry& geometry, Complex overlap);

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& intensities() const { return intensities_; }
    const SlitGeometry& geometry() const { return geometry_; }
    Complex overlap() const { return overlap_; }

    std::size_t size() const { return xs_.size(); }
    double spacing() const { return xs_[1] - xs_[0]; }

    /// Trapezoid-rule integral of the sampled intensity.
    double integrate() const;

  private:
    std::vector<double> xs_;
    std::vector<double> intensities_;
    SlitGeometry geometry_;
    Complex overlap_;
};

}  // namespace duality
