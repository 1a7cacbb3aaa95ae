#include "duality/geometry.hpp"

#include <cmath>
#include <numbers>

namespace duality {

double SlitGeometry::tau() const {
    return lambda * L / (2.0 * std::numbers::pi);
}

void SlitGeometry::validate() const {
    const double fields[4] = {epsilon, d, lambda, L};
    const char* names[4] = {"epsilon", "d", "lambda", "L"};
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(fields[i]) || fields[i] <= 0.0) {
            throw DomainError(std::string("SlitGeometry: ") + names[i] +
                              " must be finite and positive");
        }
    }
}

bool SlitGeometry::packets_overlap_significantly() const {
    return d <= 4.0 * epsilon;
}

SpreadParameters spread(const SlitGeometry& geom) {
    geom.validate();
    const double tau = geom.tau();
    const double half_rate = tau / (2.0 * geom.epsilon);
    const double sigma_t2 = geom.epsilon * geom.epsilon + half_rate * half_rate;
    const double amp2 = 0.5 / std::sqrt(2.0 * std::numbers::pi * sigma_t2);
    return SpreadParameters{tau, sigma_t2, amp2};
}

double fringe_width(const SlitGeometry& geom) {
    geom.validate();
    const double e2 = geom.epsilon * geom.epsilon;
    return geom.lambda * geom.L / geom.d +
           16.0 * std::numbers::pi * std::numbers::pi * e2 * e2 /
               (geom.lambda * geom.d * geom.L);
}

}  // namespace duality
