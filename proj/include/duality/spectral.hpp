#pragma once

#include <span>
#include <vector>

#include "duality/detector.hpp"
#include "duality/geometry.hpp"
#include "duality/pattern.hpp"

namespace duality {

/// In-place radix-2 decimation-in-time FFT, forward sign convention
/// F_m = sum_j f_j exp(-2 pi i j m / n). Length must be a power of two.
void fft_radix2(std::span<Complex> data);

/// Inverse of fft_radix2, including the 1/n normalization.
void ifft_radix2(std::span<Complex> data);

/// O(n^2) reference DFT with the same convention; the secondary oracle
/// used to validate the fast transform for n <= 1024.
std::vector<Complex> dft_direct(std::span<const Complex> data);

/// Complex wave function sampled on a GridSpec.
class ComplexField {
  public:
    ComplexField(GridSpec grid, std::vector<Complex> values);

    const GridSpec& grid() const { return grid_; }
    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }

    /// Discrete L2 norm sqrt(sum |v_i|^2 dx).
    double norm() const;

    /// Inner product <f|g> = sum conj(f_i) g_i dx (grids must match).
    Complex inner(const ComplexField& other) const;

  private:
    GridSpec grid_;
    std::vector<Complex> values_;
};

/// Unit-normalized initial Gaussian packet
///   (2 pi eps^2)^(-1/4) exp(-(x - sign d/2)^2 / 4 eps^2)
/// for sign = +1 or -1. The 1/sqrt(2) two-slit weight is NOT folded in.
ComplexField init_packet(const SlitGeometry& geom, int sign, const GridSpec& grid);

/// Free-particle evolution by parameter tau: multiply momentum mode k by
/// exp(-i k^2 tau / 2) between forward and inverse transforms. Unitary on
/// the grid. Throws CoverageError when the evolved packet no longer keeps
/// a safe guard band away from the periodic domain edges.
ComplexField propagate_free(const ComplexField& field, double tau);

/// Grid wide enough for oracle-vs-analytic comparisons down to 1e-8 of
/// peak amplitude: d/2 + 10.5 sigma_t (the propagation guard needs a
/// bigger margin than pattern synthesis does).
GridSpec oracle_grid(const SlitGeometry& geom, std::size_t n = 4096);

/// Screen pattern assembled from spectrally propagated packets:
///   |Psi|^2 = (|f1|^2 + |f2|^2)/2 + Re[<d1|d2> conj(f1) f2].
/// Fully independent of the closed-form synthesizer.
Pattern oracle_pattern(const SlitGeometry& geom, const DetectorState& d1,
                       const DetectorState& d2, const GridSpec& grid);

/// Overload taking the overlap directly.
Pattern oracle_pattern(const SlitGeometry& geom, Complex ov, const GridSpec& grid);

}  // namespace duality
