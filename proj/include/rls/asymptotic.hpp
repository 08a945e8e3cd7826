// Large-N closed forms for rotated Legendre sequences. All values are
// normalized by N^2 and depend only on the rotation fractions f = t/N.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rls {

struct AsymptoticIsl {
    std::vector<double> fractions;
    double auto_part = 0.0;
    double cross_part = 0.0;
    double total = 0.0;
};

// x mod 1, in [0, 1).
double mod1(double x);

// Re Li2(e^{i theta}) = pi^2/6 - |theta| (2 pi - |theta|) / 4 for |theta| <= 2 pi.
double re_dilog_unit_circle(double theta);

// sum_{k=1}^{terms} cos(k theta) / k^2, the truncated series the closed form
// is checked against.
double re_dilog_series(double theta, std::size_t terms);

// Re sum_k e_k^t / k^2 = pi^2 (1/6 - {t/N}(1 - {t/N})).
double re_dilog_rotation(std::int64_t t, std::uint64_t n);

// XX_aa / N^2 for a Legendre sequence rotated by fraction f.
double asym_auto(double f);

// XX_ab / N^2 for two rotations of the same Legendre sequence.
double asym_cross(double fa, double fb);

// ISL / N^2 of the set; cross_part runs over ordered pairs p != q.
AsymptoticIsl asym_isl(std::span<const double> fractions);

}  // namespace rls
