#include "duality/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace duality {

namespace {

bool is_pow2(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace

GridSpec::GridSpec(double extent, std::size_t n) : extent_(extent), n_(n) {
    if (!std::isfinite(extent) || extent <= 0.0) {
        throw DomainError("GridSpec: extent must be finite and positive");
    }
    if (n < 256 || !is_pow2(n)) {
        throw DomainError("GridSpec: n must be a power of two >= 256, got " +
                          std::to_string(n));
    }
}

double required_extent(const SlitGeometry& geom) {
    return 0.5 * geom.d + 6.0 * std::sqrt(spread(geom).sigma_t2);
}

GridSpec recommended_grid(const SlitGeometry& geom, std::size_t n) {
    const double sigma_t = std::sqrt(spread(geom).sigma_t2);
    const double extent =
        std::max(0.5 * geom.d + 6.5 * sigma_t, 2.75 * fringe_width(geom));
    return GridSpec(std::ceil(extent), n);
}

Pattern::Pattern(std::vector<double> xs, std::vector<double> intensities,
                 const SlitGeometry& geometry, Complex overlap)
    : xs_(std::move(xs)),
      intensities_(std::move(intensities)),
      geometry_(geometry),
      overlap_(overlap) {
    geometry_.validate();
    if (xs_.size() != intensities_.size()) {
        throw DomainError("Pattern: xs and intensities differ in length");
    }
    if (xs_.size() < 64) {
        throw DomainError("Pattern: need at least 64 samples");
    }
    const double dx = xs_[1] - xs_[0];
    if (!(dx > 0.0)) {
        throw DomainError("Pattern: xs must be strictly increasing");
    }
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        const double step = xs_[i] - xs_[i - 1];
        if (std::abs(step - dx) > 1e-12 * std::abs(dx)) {
            throw DomainError("Pattern: non-uniform grid spacing at index " +
                              std::to_string(i));
        }
    }
    double peak = 0.0;
    for (double v : intensities_) {
        peak = std::max(peak, v);
    }
    for (double& v : intensities_) {
        if (!std::isfinite(v) || v < -1e-12 * peak) {
            throw DomainError("Pattern: negative or non-finite intensity");
        }
        v = std::max(v, 0.0);  // clamp roundoff-negative tails
    }
}

double Pattern::integrate() const {
    double sum = 0.0;
    for (double v : intensities_) {
        sum += v;
    }
    sum -= 0.5 * (intensities_.front() + intensities_.back());
    return sum * spacing();
}

}  // namespace duality
