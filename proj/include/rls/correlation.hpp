// Direct aperiodic/periodic correlation and the ISL of a sequence set.
// Everything here is the brute-force reference the faster paths are checked
// against.

#pragma once

#include "rls/seqcore.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rls {

// Aperiodic correlation X(k) for lags k = -N+1 .. N-1.
class CorrelationProfile {
public:
    CorrelationProfile(std::size_t n, std::vector<double> values);

    std::size_t length() const { return n_; }
    std::int64_t min_lag() const { return 1 - static_cast<std::int64_t>(n_); }
    std::int64_t max_lag() const { return static_cast<std::int64_t>(n_) - 1; }

    // Throws std::out_of_range outside [-N+1, N-1].
    double at(std::int64_t k) const;
    // X(k), or 0 for lags where the aperiodic correlation is undefined.
    double value_or_zero(std::int64_t k) const;

    // Entries in lag order, values()[0] is X(-N+1).
    const std::vector<double>& values() const { return values_; }

private:
    std::size_t n_;
    std::vector<double> values_;
};

struct IslReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> auto_terms;
    // cross_terms[p][q] for p != q; the diagonal holds 0 and is not part of the sum.
    std::vector<std::vector<double>> cross_terms;
    double total = 0.0;
    double normalized = 0.0;

    double auto_part() const;
    // Ordered-pair sum over p != q.
    double cross_part() const;
};

CorrelationProfile aperiodic_correlation(const BinarySequence& a, const BinarySequence& b);

// Sidelobe energy: sum over k != 0 of X_aa(k)^2.
double sum_of_squares_auto(const BinarySequence& a);

// Sum over every lag, k = 0 included, of X_ab(k)^2.
double sum_of_squares_cross(const BinarySequence& a, const BinarySequence& b);

IslReport isl_direct(const std::vector<BinarySequence>& set);

// Periodic correlation X(k) + X(k - N) for k = 1 .. N-1; out[k - 1].
std::vector<double> periodic_correlation(const BinarySequence& a);

}  // namespace rls
