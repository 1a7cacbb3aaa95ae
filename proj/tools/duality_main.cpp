// Command-line front end: synthesizes interference patterns, eraser
// overlays and duality sweeps as CSV (optionally SVG), and runs the
// spectral-oracle cross-check.
//
// Exit codes: 0 success, 1 tolerance failure (oracle), 2 configuration
// error, 3 numerical-domain / grid-coverage error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duality/analysis.hpp"
#include "duality/detector.hpp"
#include "duality/eraser.hpp"
#include "duality/errors.hpp"
#include "duality/geometry.hpp"
#include "duality/output.hpp"
#include "duality/pattern.hpp"
#include "duality/spectral.hpp"
#include "duality/wavepacket.hpp"

namespace {

using duality::Complex;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    double epsilon = 1.0;
    double d = 10.0;
    double lambda = 1.0;
    double distance = 1000.0;
    std::string c1 = "0.7071067811865476";
    std::string c2 = "0.7071067811865476";
    double theta = 0.0;
    std::size_t grid_n = 4096;
    double grid_extent = 0.0;  // 0 = choose from the geometry
    std::size_t steps = 101;
    std::string out;
    std::string svg;
};

/// Raised while turning flags into domain values; maps to exit code 2.
struct ConfigError {
    std::string message;
};

/// Parse "re,im" or a bare real scalar.
Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return Complex(re, 0.0);
        }
        const std::string re_part = text.substr(0, comma);
        const std::string im_part = text.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) {
            throw std::invalid_argument(text);
        }
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) {
            throw std::invalid_argument(text);
        }
        return Complex(re, im);
    } catch (const std::exception&) {
        throw duality::DomainError("cannot parse complex value '" + text +
                                   "'; expected RE or RE,IM");
    }
}

duality::SlitGeometry geometry_of(const Options& opt) {
    const duality::SlitGeometry geom{opt.epsilon, opt.d, opt.lambda, opt.distance};
    try {
        geom.validate();
    } catch (const duality::Error& e) {
        throw ConfigError{e.what()};
    }
    if (geom.packets_overlap_significantly()) {
        std::cerr << "warning: d <= 4 epsilon, slit packets overlap appreciably and "
                     "normalization statements acquire exp(-d^2/8 eps^2) corrections\n";
    }
    return geom;
}

/// Coefficient pair, renormalized with a warning when off by more than 1e-6.
std::pair<Complex, Complex> coefficients_of(const Options& opt) {
    try {
        Complex c1 = parse_complex(opt.c1);
        Complex c2 = parse_complex(opt.c2) * std::polar(1.0, -opt.theta);
        const double norm2 = std::norm(c1) + std::norm(c2);
        if (norm2 <= 0.0 || !std::isfinite(norm2)) {
            throw duality::DomainError("coefficient pair has zero or non-finite norm");
        }
        if (std::abs(norm2 - 1.0) > 1e-6) {
            std::cerr << "warning: |c1|^2 + |c2|^2 = " << norm2 << ", renormalizing\n";
        }
        const double inv = 1.0 / std::sqrt(norm2);
        return {c1 * inv, c2 * inv};
    } catch (const duality::Error& e) {
        throw ConfigError{e.what()};
    }
}

duality::GridSpec pattern_grid(const Options& opt, const duality::SlitGeometry& geom) {
    try {
        if (opt.grid_extent > 0.0) {
            return duality::GridSpec(opt.grid_extent, opt.grid_n);
        }
        return duality::recommended_grid(geom, opt.grid_n);
    } catch (const duality::DomainError& e) {
        throw ConfigError{e.what()};
    }
}

duality::GridSpec oracle_grid_of(const Options& opt, const duality::SlitGeometry& geom) {
    try {
        if (opt.grid_extent > 0.0) {
            return duality::GridSpec(opt.grid_extent, opt.grid_n);
        }
        return duality::oracle_grid(geom, opt.grid_n);
    } catch (const duality::DomainError& e) {
        throw ConfigError{e.what()};
    }
}

std::vector<std::string> config_comments(const Options& opt,
                                         const duality::GridSpec& grid,
                                         std::initializer_list<std::string> extra) {
    std::vector<std::string> lines = {
        "epsilon=" + duality::format_full(opt.epsilon),
        "d=" + duality::format_full(opt.d),
        "lambda=" + duality::format_full(opt.lambda),
        "distance=" + duality::format_full(opt.distance),
        "c1=" + opt.c1,
        "c2=" + opt.c2,
        "theta=" + duality::format_full(opt.theta),
        "grid_n=" + std::to_string(grid.n()),
        "grid_extent=" + duality::format_full(grid.extent()),
    };
    lines.insert(lines.end(), extra.begin(), extra.end());
    return lines;
}

void require_out(const Options& opt) {
    if (opt.out.empty()) {
        throw CLI::ValidationError("--out", "an output path is required");
    }
}

int cmd_pattern(const Options& opt) {
    const duality::SlitGeometry geom = geometry_of(opt);
    const auto [c1, c2] = coefficients_of(opt);
    const duality::CorrelatedPair pair = duality::make_correlated_pair(c1, c2);
    const duality::GridSpec grid = pattern_grid(opt, geom);
    const duality::Pattern pattern = duality::synthesize_pattern(geom, pair.d1, pair.d2, grid);
    const duality::Visibility vis = duality::extract_visibility(pattern);
    const double dist = duality::distinguishability(pair.d1, pair.d2);

    duality::write_csv(
        opt.out,
        config_comments(opt, grid,
                        {"overlap_abs=" + duality::format_full(std::abs(pattern.overlap())),
                         "visibility=" + duality::format_full(vis.value),
                         "distinguishability=" + duality::format_full(dist)}),
        "x", pattern.xs(), {{"intensity", pattern.intensities()}});
    if (!opt.svg.empty()) {
        duality::write_svg(opt.svg, "double-slit pattern", pattern.xs(),
                           {{"intensity", pattern.intensities(),
                             duality::LineStyle::solid, "black"}});
    }
    std::cout << "pattern: V=" << vis.value << " D=" << dist << " -> " << opt.out
              << '\n';
    return kExitOk;
}

int cmd_eraser(const Options& opt) {
    const duality::SlitGeometry geom = geometry_of(opt);
    // For the eraser overlay c1/c2 weight the q1/q2 fringe modes directly
    // (to_q_basis bridges from detector coefficients when needed).
    const auto [g1, g2] = coefficients_of(opt);
    const duality::QBasisState q(g1, g2);
    const duality::GridSpec grid = pattern_grid(opt, geom);
    const duality::Pattern pq1 = duality::conditional_pattern(geom, duality::EraserPort::q1, grid);
    const duality::Pattern pq2 = duality::conditional_pattern(geom, duality::EraserPort::q2, grid);
    const duality::Pattern marg = duality::marginal_pattern(geom, q, grid);

    duality::write_csv(
        opt.out,
        config_comments(opt, grid,
                        {"q1_weight=" + duality::format_full(std::norm(q.g1())),
                         "q2_weight=" + duality::format_full(std::norm(q.g2()))}),
        "x", pq1.xs(),
        {{"conditional_q1", pq1.intensities()},
         {"conditional_q2", pq2.intensities()},
         {"marginal", marg.intensities()}});
    if (!opt.svg.empty()) {
        duality::write_svg(
            opt.svg, "quantum eraser: conditional and marginal patterns", pq1.xs(),
            {{"conditional q1", pq1.intensities(), duality::LineStyle::solid, "black"},
             {"conditional q2", pq2.intensities(), duality::LineStyle::dashed, "crimson"},
             {"marginal", marg.intensities(), duality::LineStyle::dotted, "royalblue"}});
    }
    std::cout << "eraser: q1 weight " << std::norm(q.g1()) << ", q2 weight "
              << std::norm(q.g2()) << " -> " << opt.out << '\n';
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    if (opt.steps < 2) {
        throw CLI::ValidationError("--steps", "need at least 2 sweep steps");
    }
    const duality::SlitGeometry geom = geometry_of(opt);
    const std::vector<duality::DualityReport> reports =
        duality::duality_sweep(geom, opt.steps);

    const double c1_lo = 1.0 / std::sqrt(2.0);
    std::vector<double> c1s(reports.size());
    duality::Series d{"D", {}}, v{"V", {}}, v2d2{"V2+D2", {}}, dp{"dP2", {}},
        dq{"dQ2", {}}, sum{"dP2+dQ2", {}};
    double max_residual = -1.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(reports.size() - 1);
        c1s[i] = c1_lo + (1.0 - c1_lo) * t;
        const duality::DualityReport& r = reports[i];
        d.values.push_back(r.distinguishability);
        v.values.push_back(r.visibility);
        v2d2.values.push_back(r.v2_plus_d2);
        dp.values.push_back(r.delta_p2);
        dq.values.push_back(r.delta_q2);
        sum.values.push_back(r.delta_p2 + r.delta_q2);
        max_residual = std::max(max_residual, r.bound_residual);
    }
    const duality::GridSpec grid = duality::recommended_grid(geom);
    duality::write_csv(opt.out,
                       config_comments(opt, grid,
                                       {"steps=" + std::to_string(opt.steps),
                                        "max_bound_residual=" +
                                            duality::format_full(max_residual)}),
                       "c1", c1s, {d, v, v2d2, dp, dq, sum});
    if (!opt.svg.empty()) {
        duality::write_svg(opt.svg, "duality sweep: V, D and V^2+D^2 vs c1", c1s,
                           {{"V", v.values, duality::LineStyle::solid, "black"},
                            {"D", d.values, duality::LineStyle::dashed, "crimson"},
                            {"V^2+D^2", v2d2.values, duality::LineStyle::dotted,
                             "royalblue"}});
    }
    std::cout << "sweep: " << opt.steps
              << " rows, max bound residual = " << max_residual << " -> " << opt.out
              << '\n';
    return kExitOk;
}

int cmd_oracle(const Options& opt) {
    const duality::SlitGeometry geom = geometry_of(opt);
    const auto [c1, c2] = coefficients_of(opt);
    const duality::CorrelatedPair pair = duality::make_correlated_pair(c1, c2);
    const Complex ov = duality::overlap(pair.d1, pair.d2);
    const duality::GridSpec grid = oracle_grid_of(opt, geom);
    const double tau = geom.tau();

    // amplitude comparison, unit packets vs sqrt(2) * folded closed form
    const duality::ComplexField f1 =
        duality::propagate_free(duality::init_packet(geom, +1, grid), tau);
    const duality::ComplexField f2 =
        duality::propagate_free(duality::init_packet(geom, -1, grid), tau);
    double amp_err = 0.0;
    double peak = 0.0;
    std::vector<Complex> a1(grid.n()), a2(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const duality::EvolvedAmplitudes amps =
            duality::evolved_amplitudes(grid.position(i), geom);
        a1[i] = std::sqrt(2.0) * amps.psi1;
        a2[i] = std::sqrt(2.0) * amps.psi2;
        peak = std::max(peak, std::abs(a1[i]));
    }
    for (std::size_t i = 0; i < grid.n(); ++i) {
        if (std::abs(a1[i]) > 1e-8 * peak) {
            amp_err = std::max(amp_err,
                               std::abs(f1.values()[i] - a1[i]) / std::abs(a1[i]));
        }
        if (std::abs(a2[i]) > 1e-8 * peak) {
            amp_err = std::max(amp_err,
                               std::abs(f2.values()[i] - a2[i]) / std::abs(a2[i]));
        }
    }

    // pattern comparison at the configured overlap
    const duality::Pattern analytic = duality::synthesize_pattern(geom, ov, grid);
    const duality::Pattern oracle = duality::oracle_pattern(geom, ov, grid);
    double pattern_err = 0.0;
    double ipeak = 0.0;
    for (double vi : analytic.intensities()) {
        ipeak = std::max(ipeak, vi);
    }
    for (std::size_t i = 0; i < grid.n(); ++i) {
        if (analytic.intensities()[i] > 1e-10 * ipeak) {
            pattern_err = std::max(
                pattern_err, std::abs(analytic.intensities()[i] - oracle.intensities()[i]) /
                                 analytic.intensities()[i]);
        }
    }

    // fringe spacing on the full-overlap oracle pattern
    const duality::Pattern fringed =
        duality::oracle_pattern(geom, Complex(1.0, 0.0), grid);
    const double spacing = duality::measured_fringe_spacing(fringed);
    const double w = duality::fringe_width(geom);
    const double fringe_err = std::abs(spacing - w) / w;

    // norm checks: propagation unitarity and incoherent pattern normalization
    const double norm_err =
        std::max(std::abs(f1.norm() - 1.0), std::abs(f2.norm() - 1.0));
    const duality::Pattern incoherent =
        duality::oracle_pattern(geom, Complex(0.0, 0.0), grid);
    const double integral_err = std::abs(incoherent.integrate() - 1.0);

    const bool amp_ok = amp_err <= 1e-6;
    const bool fringe_ok = fringe_err <= 1e-2;
    const bool norm_ok = norm_err <= 1e-6 && integral_err <= 1e-6;
    std::cout << "oracle check (grid extent " << grid.extent() << ", n " << grid.n()
              << "):\n"
              << "  amplitude Linf relative error: " << amp_err << " (tol 1e-6) "
              << (amp_ok ? "ok" : "FAIL") << '\n'
              << "  pattern   Linf relative error: " << pattern_err << " (info)\n"
              << "  fringe spacing " << spacing << " vs " << w
              << ", relative error: " << fringe_err << " (tol 1e-2) "
              << (fringe_ok ? "ok" : "FAIL") << '\n'
              << "  norm drift " << norm_err << ", incoherent integral drift "
              << integral_err << " (tol 1e-6) " << (norm_ok ? "ok" : "FAIL") << '\n';
    return (amp_ok && fringe_ok && norm_ok) ? kExitOk : kExitTolerance;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_steps) {
    cmd->add_option("--epsilon", opt.epsilon, "initial packet half-width");
    cmd->add_option("--d", opt.d, "slit separation");
    cmd->add_option("--lambda", opt.lambda, "de Broglie wavelength");
    cmd->add_option("--distance", opt.distance, "slit-to-screen distance L");
    cmd->add_option("--c1", opt.c1, "first coefficient, RE or RE,IM");
    cmd->add_option("--c2", opt.c2, "second coefficient, RE or RE,IM");
    cmd->add_option("--theta", opt.theta,
                    "extra overlap phase; multiplies c2 by exp(-i theta)");
    cmd->add_option("--grid-n", opt.grid_n, "grid samples (power of two)");
    cmd->add_option("--grid-extent", opt.grid_extent,
                    "grid half-width; 0 chooses one from the geometry");
    if (with_steps) {
        cmd->add_option("--steps", opt.steps, "number of sweep rows");
    }
    cmd->add_option("--out", opt.out, "output CSV path");
    cmd->add_option("--svg", opt.svg, "optional SVG plot path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recoiling-slit which-way interference simulator"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* pattern = app.add_subcommand(
        "pattern", "synthesize the screen pattern for a detector pair");
    CLI::App* eraser = app.add_subcommand(
        "eraser", "conditional q1/q2 patterns and the weighted marginal");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "duality sweep over real c1 in [1/sqrt(2), 1]");
    CLI::App* oracle = app.add_subcommand(
        "oracle", "cross-check closed forms against the spectral propagator");
    add_common_options(pattern, opt, false);
    add_common_options(eraser, opt, false);
    add_common_options(sweep, opt, true);
    add_common_options(oracle, opt, false);

    try {
        app.parse(argc, argv);
        if (pattern->parsed()) {
            require_out(opt);
            return cmd_pattern(opt);
        }
        if (eraser->parsed()) {
            require_out(opt);
            return cmd_eraser(opt);
        }
        if (sweep->parsed()) {
            require_out(opt);
            return cmd_sweep(opt);
        }
        return cmd_oracle(opt);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitConfig;
    } catch (const duality::CoverageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const duality::NormalizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const duality::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const duality::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
