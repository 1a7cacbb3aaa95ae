#include "duality/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace duality {

namespace {

void check_pow2(std::size_t n, const char* who) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw DomainError(std::string(who) + ": length must be a power of two");
    }
}

/// Twiddle table w[j] = exp(-2 pi i j / n), j < n/2, each entry from
/// std::polar in long double so table error stays below butterfly roundoff.
std::vector<Complex> twiddles(std::size_t n) {
    std::vector<Complex> w(n / 2);
    const long double step = -2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) {
        const long double a = step * static_cast<long double>(j);
        w[j] = Complex(static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a)));
    }
    return w;
}

}  // namespace

void fft_radix2(std::span<Complex> data) {
    const std::size_t n = data.size();
    check_pow2(n, "fft_radix2");
    if (n == 1) {
        return;
    }
    // bit-reversal permutation
    const unsigned bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        std::size_t v = i;
        for (unsigned b = 0; b < bits; ++b) {
            r = (r << 1) | (v & 1);
            v >>= 1;
        }
        if (r > i) {
            std::swap(data[i], data[r]);
        }
    }
    const std::vector<Complex> w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t block = 0; block < n; block += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex t = w[j * stride] * data[block + j + len / 2];
                const Complex u = data[block + j];
                data[block + j] = u + t;
                data[block + j + len / 2] = u - t;
            }
        }
    }
}

void ifft_radix2(std::span<Complex> data) {
    for (Complex& v : data) {
        v = std::conj(v);
    }
    fft_radix2(data);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (Complex& v : data) {
        v = std::conj(v) * scale;
    }
}

std::vector<Complex> dft_direct(std::span<const Complex> data) {
    const std::size_t n = data.size();
    std::vector<Complex> out(n);
    const long double step = -2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n);
    for (std::size_t m = 0; m < n; ++m) {
        long double re = 0.0L;
        long double im = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
            // reduce j*m mod n before forming the angle to keep it small
            const long double a = step * static_cast<long double>((j * m) % n);
            const long double c = std::cos(a);
            const long double s = std::sin(a);
            re += data[j].real() * c - data[j].imag() * s;
            im += data[j].real() * s + data[j].imag() * c;
        }
        out[m] = Complex(static_cast<double>(re), static_cast<double>(im));
    }
    return out;
}

ComplexField::ComplexField(GridSpec grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.n()) {
        throw DomainError("ComplexField: value count does not match grid");
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("ComplexField: non-finite sample");
        }
    }
}

double ComplexField::norm() const {
    double sum = 0.0;
    for (const Complex& v : values_) {
        sum += std::norm(v);
    }
    return std::sqrt(sum * grid_.spacing());
}

Complex ComplexField::inner(const ComplexField& other) const {
    if (grid_.n() != other.grid_.n() || grid_.extent() != other.grid_.extent()) {
        throw DomainError("ComplexField::inner: mismatched grids");
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        sum += std::conj(values_[i]) * other.values_[i];
    }
    return sum * grid_.spacing();
}

ComplexField init_packet(const SlitGeometry& geom, int sign, const GridSpec& grid) {
    geom.validate();
    if (sign != 1 && sign != -1) {
        throw DomainError("init_packet: sign must be +1 or -1");
    }
    const double eps = geom.epsilon;
    const double needed = 0.5 * geom.d + 8.0 * eps;
    if (grid.extent() < needed) {
        throw CoverageError("init_packet: grid extent " + std::to_string(grid.extent()) +
                                " too small for the initial packets; need " +
                                std::to_string(needed),
                            needed);
    }
    if (eps < 1.2 * grid.spacing()) {
        throw DomainError("init_packet: grid spacing " + std::to_string(grid.spacing()) +
                          " too coarse to resolve packet width " + std::to_string(eps));
    }
    const double center = sign * 0.5 * geom.d;
    const double amp = std::pow(2.0 * std::numbers::pi * eps * eps, -0.25);
    std::vector<Complex> values(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double dx = grid.position(i) - center;
        values[i] = Complex(amp * std::exp(-dx * dx / (4.0 * eps * eps)), 0.0);
    }
    return ComplexField(grid, std::move(values));
}

ComplexField propagate_free(const ComplexField& field, double tau) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw DomainError("propagate_free: tau must be finite and non-negative");
    }
    const GridSpec& grid = field.grid();
    const std::size_t n = grid.n();
    std::vector<Complex> values = field.values();
    fft_radix2(values);
    const double dk = std::numbers::pi / grid.extent();  // 2 pi / (2 X)
    for (std::size_t i = 0; i < n; ++i) {
        // signed discrete frequency: 0..n/2-1, then -n/2..-1
        const double idx = (i < n / 2) ? static_cast<double>(i)
                                       : static_cast<double>(i) - static_cast<double>(n);
        const double k = idx * dk;
        values[i] *= std::polar(1.0, -0.5 * k * k * tau);
    }
    ifft_radix2(values);
    ComplexField out(grid, std::move(values));

    // Wraparound guard: the evolved packet must keep its 6-sigma support
    // plus a 4-sigma buffer inside the periodic domain, and nothing
    // appreciable may sit on the outermost samples.
    double total = 0.0;
    double mean = 0.0;
    double mean2 = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::norm(out.values()[i]);
        const double x = grid.position(i);
        total += p;
        mean += p * x;
        mean2 += p * x * x;
        peak = std::max(peak, std::abs(out.values()[i]));
    }
    if (total > 0.0) {
        mean /= total;
        mean2 /= total;
        const double sigma = std::sqrt(std::max(mean2 - mean * mean, 0.0));
        const double needed = std::abs(mean) + 10.0 * sigma;
        const double edge = std::max(std::abs(out.values().front()),
                                     std::abs(out.values().back()));
        if (grid.extent() < needed || edge > 1e-4 * peak) {
            throw CoverageError(
                "propagate_free: domain too small, evolved packet reaches the "
                "periodic boundary; need extent >= " +
                    std::to_string(needed),
                needed);
        }
    }
    return out;
}

GridSpec oracle_grid(const SlitGeometry& geom, std::size_t n) {
    const double sigma_t = std::sqrt(spread(geom).sigma_t2);
    return GridSpec(std::ceil(0.5 * geom.d + 10.5 * sigma_t), n);
}

Pattern oracle_pattern(const SlitGeometry& geom, Complex ov, const GridSpec& grid) {
    if (std::abs(ov) > 1.0 + 1e-12) {
        throw DomainError("oracle_pattern: |<d1|d2>| exceeds 1");
    }
    const ComplexField f1 = propagate_free(init_packet(geom, +1, grid), geom.tau());
    const ComplexField f2 = propagate_free(init_packet(geom, -1, grid), geom.tau());
    std::vector<double> xs(grid.n());
    std::vector<double> is(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        xs[i] = grid.position(i);
        const Complex a = f1.values()[i];
        const Complex b = f2.values()[i];
        is[i] = 0.5 * (std::norm(a) + std::norm(b)) + (ov * std::conj(a) * b).real();
    }
    return Pattern(std::move(xs), std::move(is), geom, ov);
}

Pattern oracle_pattern(const SlitGeometry& geom, const DetectorState& d1,
                       const DetectorState& d2, const GridSpec& grid) {
    return oracle_pattern(geom, overlap(d1, d2), grid);
}

}  // namespace duality
