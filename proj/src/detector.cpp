#include "duality/detector.hpp"

#include <cmath>

namespace duality {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

DetectorState::DetectorState(Complex a_p1, Complex a_p2) : a_p1_(a_p1), a_p2_(a_p2) {
    if (!finite(a_p1) || !finite(a_p2)) {
        throw DomainError("DetectorState: non-finite amplitude");
    }
    const double norm2 = std::norm(a_p1_) + std::norm(a_p2_);
    const double deficit = std::abs(norm2 - 1.0);
    if (deficit > kNormInputTolerance) {
        throw NormalizationError("DetectorState: |a_p1|^2 + |a_p2|^2 deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    a_p1_ *= inv;
    a_p2_ *= inv;
}

DetectorState DetectorState::with_global_phase(double phase) const {
    const Complex factor = std::polar(1.0, phase);
    return DetectorState(a_p1_ * factor, a_p2_ * factor);
}

TwoLevelObservable::TwoLevelObservable(double n_x, double n_y, double n_z)
    : n_x_(n_x), n_y_(n_y), n_z_(n_z) {
    if (!std::isfinite(n_x) || !std::isfinite(n_y) || !std::isfinite(n_z)) {
        throw DomainError("TwoLevelObservable: non-finite Bloch component");
    }
    const double norm2 = n_x_ * n_x_ + n_y_ * n_y_ + n_z_ * n_z_;
    const double deficit = std::abs(norm2 - 1.0);
    if (deficit > kNormInputTolerance) {
        throw NormalizationError("TwoLevelObservable: Bloch vector norm deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    n_x_ *= inv;
    n_y_ *= inv;
    n_z_ *= inv;
}

CorrelatedPair make_correlated_pair(Complex c1, Complex c2) {
    if (!finite(c1) || !finite(c2)) {
        throw DomainError("make_correlated_pair: non-finite coefficient");
    }
    const double norm2 = std::norm(c1) + std::norm(c2);
    const double deficit = std::abs(norm2 - 1.0);
    if (deficit > kNormInputTolerance) {
        throw NormalizationError("make_correlated_pair: |c1|^2 + |c2|^2 deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
    }
    return CorrelatedPair{DetectorState(c1, c2),
                          DetectorState(std::conj(c2), std::conj(c1))};
}

Complex overlap(const DetectorState& d1, const DetectorState& d2) {
    return std::conj(d1.a_p1()) * d2.a_p1() + std::conj(d1.a_p2()) * d2.a_p2();
}

double distinguishability(const DetectorState& d1, const DetectorState& d2) {
    const double radicand = 1.0 - std::norm(overlap(d1, d2));
    if (radicand < -kNormStoredTolerance) {
        throw InternalConsistencyError(
            "distinguishability: |<d1|d2>|^2 exceeds 1 by " + std::to_string(-radicand));
    }
    return std::sqrt(std::max(radicand, 0.0));
}

double expectation(const TwoLevelObservable& obs, const DetectorState& s) {
    const Complex cross = std::conj(s.a_p1()) * s.a_p2();
    return obs.n_x() * 2.0 * cross.real() + obs.n_y() * 2.0 * cross.imag() +
           obs.n_z() * (std::norm(s.a_p1()) - std::norm(s.a_p2()));
}

double variance(const TwoLevelObservable& obs, const DetectorState& s) {
    const double mean = expectation(obs, s);
    return 1.0 - mean * mean;
}

SumUncertainty sum_uncertainty(const DetectorState& s) {
    const double dp2 = variance(TwoLevelObservable::path(), s);
    const double dq2 = variance(TwoLevelObservable::erasure(), s);
    return SumUncertainty{dp2, dq2, dp2 + dq2};
}

EraserBasis eraser_basis() {
    const double r = 1.0 / std::sqrt(2.0);
    return EraserBasis{DetectorState(r, r), DetectorState(r, -r)};
}

}  // namespace duality
