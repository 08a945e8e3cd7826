#include "rls/asymptotic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rls {

namespace {

void require_unit_interval(double f) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::domain_error("rotation fraction must lie in [0,1]");
}

double sq(double x) { return x * x; }

}  // namespace

double mod1(double x) {
    const double r = x - std::floor(x);
    // floor() of a tiny negative x gives r == 1.0 after rounding.
    return r >= 1.0 ? 0.0 : r;
}

double re_dilog_unit_circle(double theta) {
    constexpr double pi = std::numbers::pi;
    const double a = std::abs(theta);
    if (a > 2.0 * pi) throw std::domain_error("theta must be reduced to [-2pi, 2pi]");
    return pi * pi / 6.0 - 0.25 * a * (2.0 * pi - a);
}

double re_dilog_series(double theta, std::size_t terms) {
    // z^k by repeated multiplication, re-anchored periodically so phase error
    // stays bounded over a million terms.
    constexpr std::size_t resync = 256;
    const std::complex<double> step = std::polar(1.0, theta);
    std::complex<double> z = step;
    double s = 0.0;
    for (std::size_t k = 1; k <= terms; ++k) {
        if (k % resync == 0) z = std::polar(1.0, static_cast<double>(k) * theta);
        const double kk = static_cast<double>(k);
        s += z.real() / (kk * kk);
        z *= step;
    }
    return s;
}

double re_dilog_rotation(std::int64_t t, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    constexpr double pi = std::numbers::pi;
    const double f = mod1(static_cast<double>(t) / static_cast<double>(n));
    return pi * pi * (1.0 / 6.0 - f * (1.0 - f));
}

double asym_auto(double f) {
    require_unit_interval(f);
    return 2.0 / 3.0 - 4.0 * std::abs(f - 0.5) + 8.0 * sq(f - 0.5);
}

double asym_cross(double fa, double fb) {
    require_unit_interval(fa);
    require_unit_interval(fb);
    return 2.0 / 3.0 + 2.0 * sq(std::abs(fa + fb - 1.0) - 0.5) + 2.0 * sq(std::abs(fa - fb) - 0.5);
}

AsymptoticIsl asym_isl(std::span<const double> fractions) {
    if (fractions.empty()) throw std::invalid_argument("asymptotic ISL of an empty rotation set");
    AsymptoticIsl r;
    r.fractions.assign(fractions.begin(), fractions.end());
    const std::size_t m = fractions.size();
    for (std::size_t p = 0; p < m; ++p) r.auto_part += asym_auto(fractions[p]);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) r.cross_part += 2.0 * asym_cross(fractions[p], fractions[q]);
    r.total = r.auto_part + r.cross_part;
    return r;
}

}  // namespace rls
