#include "duality/eraser.hpp"

#include <cmath>
#include <string>

#include "duality/analysis.hpp"
#include "duality/wavepacket.hpp"

namespace duality {

QBasisState::QBasisState(Complex g1, Complex g2) : g1_(g1), g2_(g2) {
    if (!std::isfinite(std::abs(g1)) || !std::isfinite(std::abs(g2))) {
        throw DomainError("QBasisState: non-finite amplitude");
    }
    const double norm2 = std::norm(g1_) + std::norm(g2_);
    const double deficit = std::abs(norm2 - 1.0);
    if (deficit > kNormInputTolerance) {
        throw NormalizationError("QBasisState: |g1|^2 + |g2|^2 deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    g1_ *= inv;
    g2_ *= inv;
}

double QBasisState::fringe_weight() const {
    return std::norm(g1_) - std::norm(g2_);
}

QBasisState to_q_basis(Complex c1, Complex c2) {
    const double norm2 = std::norm(c1) + std::norm(c2);
    const double deficit = std::abs(norm2 - 1.0);
    if (deficit > kNormInputTolerance) {
        throw NormalizationError("to_q_basis: |c1|^2 + |c2|^2 deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
    }
    const double r = 1.0 / std::sqrt(2.0);
    const Complex g1 = (c1 + c2) * r;
    const Complex g2 = (c1 - c2) * r;
    const double out_deficit = std::abs(std::norm(g1) + std::norm(g2) - 1.0);
    if (out_deficit > kNormInputTolerance) {
        throw InternalConsistencyError(
            "to_q_basis: result norm off by " + std::to_string(out_deficit) +
            ", coefficient convention bug");
    }
    return QBasisState(g1, g2);
}

namespace {

void check_coverage(const SlitGeometry& geom, const GridSpec& grid, const char* who) {
    const double needed = required_extent(geom);
    if (grid.extent() + 1e-9 < needed) {
        throw CoverageError(std::string(who) + ": grid extent " +
                                std::to_string(grid.extent()) +
                                " is below the required " + std::to_string(needed),
                            needed);
    }
}

}  // namespace

Pattern conditional_pattern(const SlitGeometry& geom, EraserPort which,
                            const GridSpec& grid) {
    geom.validate();
    check_coverage(geom, grid, "conditional_pattern");
    const double sign = (which == EraserPort::q1) ? 1.0 : -1.0;
    std::vector<double> xs(grid.n());
    std::vector<double> is(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        xs[i] = grid.position(i);
        const EvolvedAmplitudes amps = evolved_amplitudes(xs[i], geom);
        is[i] = std::norm(amps.psi1 + sign * amps.psi2);
    }
    return Pattern(std::move(xs), std::move(is), geom, Complex(sign, 0.0));
}

Pattern marginal_pattern(const SlitGeometry& geom, const QBasisState& q,
                         const GridSpec& grid) {
    geom.validate();
    check_coverage(geom, grid, "marginal_pattern");
    const double weight = q.fringe_weight();
    std::vector<double> xs(grid.n());
    std::vector<double> is(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        xs[i] = grid.position(i);
        const EvolvedAmplitudes amps = evolved_amplitudes(xs[i], geom);
        is[i] = std::norm(amps.psi1) + std::norm(amps.psi2) +
                weight * 2.0 * (std::conj(amps.psi1) * amps.psi2).real();
    }
    return Pattern(std::move(xs), std::move(is), geom, Complex(weight, 0.0));
}

double delta_q2(const QBasisState& q) {
    const double w = q.fringe_weight();
    return 1.0 - w * w;
}

UncertaintyChainReport uncertainty_duality_chain(Complex c1, Complex c2,
                                                 const SlitGeometry& geom,
                                                 const GridSpec& grid) {
    const CorrelatedPair pair = make_correlated_pair(c1, c2);
    const double dist = distinguishability(pair.d1, pair.d2);
    const double dp2 = variance(TwoLevelObservable::path(), pair.d1);
    const QBasisState q = to_q_basis(c1, c2);
    const double dq2 = delta_q2(q);
    const double weight = q.fringe_weight();
    const double v = extract_visibility(marginal_pattern(geom, q, grid)).value;

    const auto fail = [&](const char* which, double lhs, double rhs) {
        throw ChainViolationError("uncertainty_duality_chain: " + std::string(which) +
                                      " violated: " + std::to_string(lhs) + " > " +
                                      std::to_string(rhs),
                                  which);
    };
    if (v * v > weight * weight + 1e-6) {
        fail("V^2 <= (|g1|^2 - |g2|^2)^2", v * v, weight * weight);
    }
    if (v * v > 1.0 - dq2 + 1e-6) {
        fail("V^2 <= 1 - Var(Q)", v * v, 1.0 - dq2);
    }
    if (dist * dist + v * v > 2.0 - (dp2 + dq2) + 1e-6) {
        fail("D^2 + V^2 <= 2 - [Var(P) + Var(Q)]", dist * dist + v * v,
             2.0 - (dp2 + dq2));
    }
    if (dp2 + dq2 < 1.0 - 1e-12) {
        fail("Var(P) + Var(Q) >= 1", 1.0, dp2 + dq2);
    }
    if (dist * dist + v * v > 1.0 + 1e-6) {
        fail("D^2 + V^2 <= 1", dist * dist + v * v, 1.0);
    }
    return UncertaintyChainReport{v, dist, dp2, dq2, weight};
}

UncertaintyChainReport uncertainty_duality_chain(Complex c1, Complex c2) {
    return uncertainty_duality_chain(c1, c2, kReferenceGeometry,
                                     recommended_grid(kReferenceGeometry));
}

}  // namespace duality
