#include "duality/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "duality/wavepacket.hpp"

namespace duality {

namespace {

struct Extremum {
    double x;
    double value;
};

/// Quadratic refinement through the three samples bracketing index i.
Extremum refine(const std::vector<double>& xs, const std::vector<double>& f,
                std::size_t i, double dx) {
    const double a = f[i - 1];
    const double b = f[i];
    const double c = f[i + 1];
    const double den = a - 2.0 * b + c;
    if (den == 0.0) {
        return Extremum{xs[i], b};
    }
    const double delta = 0.5 * (a - c) / den;
    return Extremum{xs[i] + delta * dx, b - 0.25 * (a - c) * delta};
}

}  // namespace

Visibility extract_visibility(const Pattern& pattern) {
    const SlitGeometry& geom = pattern.geometry();
    const double w = fringe_width(geom);
    const double window = 2.0 * w;
    const std::vector<double>& xs = pattern.xs();
    const std::vector<double>& is = pattern.intensities();
    const std::size_t n = pattern.size();
    const double dx = pattern.spacing();

    // Flatten by the incoherent envelope before looking for extrema.
    std::vector<double> flat(n, 0.0);
    std::vector<bool> usable(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(xs[i]) > window) {
            continue;
        }
        const double env = envelope_intensity(xs[i], geom);
        if (env <= 0.0) {
            continue;
        }
        flat[i] = is[i] / env;
        usable[i] = true;
    }

    std::vector<Extremum> maxima;
    std::vector<Extremum> minima;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!usable[i - 1] || !usable[i] || !usable[i + 1]) {
            continue;
        }
        if (flat[i] > flat[i - 1] && flat[i] > flat[i + 1]) {
            maxima.push_back(refine(xs, flat, i, dx));
        } else if (flat[i] < flat[i - 1] && flat[i] < flat[i + 1]) {
            minima.push_back(refine(xs, flat, i, dx));
        }
    }
    if (maxima.empty() || minima.empty()) {
        return Visibility{0.0, true, 0.0, 0.0, 0.0, 0.0};
    }

    const auto closer_to = [](double target) {
        return [target](const Extremum& a, const Extremum& b) {
            const double da = std::abs(a.x - target);
            const double db = std::abs(b.x - target);
            if (da != db) {
                return da < db;
            }
            return a.x < b.x;
        };
    };
    const Extremum top = *std::min_element(maxima.begin(), maxima.end(), closer_to(0.0));
    const Extremum bottom = *std::min_element(minima.begin(), minima.end(), closer_to(top.x));

    const double f_max = top.value;
    const double f_min = std::max(bottom.value, 0.0);  // interpolation can undershoot 0
    if (f_max + f_min == 0.0) {
        throw DegeneratePatternError("extract_visibility: Imax + Imin vanished");
    }
    const double v = (f_max - f_min) / (f_max + f_min);
    return Visibility{v, false, top.x, bottom.x, f_max, f_min};
}

double theoretical_visibility(const SlitGeometry& geom, Complex ov, double x_star) {
    const SpreadParameters sp = spread(geom);
    return std::abs(ov) / std::cosh(x_star * geom.d / (2.0 * sp.sigma_t2));
}

double measured_fringe_spacing(const Pattern& pattern) {
    const SlitGeometry& geom = pattern.geometry();
    const double window = 2.5 * fringe_width(geom);
    const std::vector<double>& xs = pattern.xs();
    const std::vector<double>& is = pattern.intensities();
    const std::size_t n = pattern.size();
    const double dx = pattern.spacing();

    std::vector<double> flat(n, 0.0);
    std::vector<bool> usable(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(xs[i]) > window) {
            continue;
        }
        const double env = envelope_intensity(xs[i], geom);
        if (env <= 0.0) {
            continue;
        }
        flat[i] = is[i] / env;
        usable[i] = true;
    }
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (usable[i - 1] && usable[i] && usable[i + 1] && flat[i] > flat[i - 1] &&
            flat[i] > flat[i + 1]) {
            peaks.push_back(refine(xs, flat, i, dx).x);
        }
    }
    if (peaks.size() < 2) {
        throw DegeneratePatternError(
            "measured_fringe_spacing: fewer than two maxima near center");
    }
    std::sort(peaks.begin(), peaks.end());
    double sum = 0.0;
    for (std::size_t i = 1; i < peaks.size(); ++i) {
        sum += peaks[i] - peaks[i - 1];
    }
    return sum / static_cast<double>(peaks.size() - 1);
}

DualityReport duality_report(const SlitGeometry& geom, const DetectorState& d1,
                             const DetectorState& d2, const GridSpec& grid) {
    const double dist = distinguishability(d1, d2);
    const Pattern pattern = synthesize_pattern(geom, d1, d2, grid);
    const double v = extract_visibility(pattern).value;
    const double dp2 = variance(TwoLevelObservable::path(), d1);
    const double dq2 = variance(TwoLevelObservable::erasure(), d1);
    const double v2d2 = v * v + dist * dist;

    if (v2d2 > 1.0 + 1e-9) {
        throw ChainViolationError("duality_report: V^2 + D^2 = " + std::to_string(v2d2) +
                                      " exceeds 1",
                                  "V^2 + D^2 <= 1");
    }
    if (dp2 + dq2 < 1.0 - 1e-12) {
        throw ChainViolationError("duality_report: Var(P) + Var(Q) = " +
                                      std::to_string(dp2 + dq2) + " below 1",
                                  "Var(P) + Var(Q) >= 1");
    }
    // The tighter bound V^2 + D^2 <= 2 - [Var(P) + Var(Q)] belongs to
    // states expanded over fixed fringe modes; it applies verbatim only
    // when the pair's coefficients are real up to a global phase.
    const TwoLevelObservable sigma_y(0.0, 1.0, 0.0);
    if (std::abs(expectation(sigma_y, d1)) <= 1e-9 &&
        v2d2 > 2.0 - (dp2 + dq2) + 1e-9) {
        throw ChainViolationError(
            "duality_report: V^2 + D^2 exceeds 2 - [Var(P) + Var(Q)]",
            "V^2 + D^2 <= 2 - [Var(P) + Var(Q)]");
    }
    return DualityReport{v, dist, dp2, dq2, v2d2, 1.0 - v2d2};
}

DualityReport duality_report(const SlitGeometry& geom, const DetectorState& d1,
                             const DetectorState& d2) {
    return duality_report(geom, d1, d2, recommended_grid(geom));
}

std::vector<DualityReport> duality_sweep(const SlitGeometry& geom, std::size_t n_steps) {
    if (n_steps < 2) {
        throw DomainError("duality_sweep: need at least 2 steps");
    }
    const GridSpec grid = recommended_grid(geom);
    const double c1_lo = 1.0 / std::sqrt(2.0);
    std::vector<DualityReport> reports;
    reports.reserve(n_steps);
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_steps - 1);
        const double c1 = c1_lo + (1.0 - c1_lo) * t;
        const double c2 = std::sqrt(std::max(1.0 - c1 * c1, 0.0));
        const CorrelatedPair pair = make_correlated_pair(c1, c2);
        reports.push_back(duality_report(geom, pair.d1, pair.d2, grid));
    }
    return reports;
}

}  // namespace duality
