#include "rls/correlation.hpp"

#include <stdexcept>
#include <string>

namespace rls {

namespace {

void require_same_length(const BinarySequence& a, const BinarySequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sequence length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    if (a.empty()) throw std::invalid_argument("empty sequence");
}

// Integer correlation at one lag; entries are +-1 so the sum is exact.
std::int64_t correlate_at(const BinarySequence& a, const BinarySequence& b, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(a.size());
    const std::int64_t lo = k < 0 ? -k : 0;
    const std::int64_t hi = k > 0 ? n - k : n;
    std::int64_t s = 0;
    for (std::int64_t j = lo; j < hi; ++j) s += a[j] * b[j + k];
    return s;
}

// Sum of squares over all lags, accumulated in integers.
std::int64_t integer_energy(const BinarySequence& a, const BinarySequence& b) {
    const auto n = static_cast<std::int64_t>(a.size());
    std::int64_t e = 0;
    for (std::int64_t k = 1 - n; k < n; ++k) {
        const std::int64_t x = correlate_at(a, b, k);
        e += x * x;
    }
    return e;
}

}  // namespace

CorrelationProfile::CorrelationProfile(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (n_ == 0 || values_.size() != 2 * n_ - 1)
        throw std::invalid_argument("correlation profile needs exactly 2N-1 entries");
}

double CorrelationProfile::at(std::int64_t k) const {
    if (k < min_lag() || k > max_lag()) throw std::out_of_range("lag out of range");
    return values_[static_cast<std::size_t>(k - min_lag())];
}

double CorrelationProfile::value_or_zero(std::int64_t k) const {
    if (k < min_lag() || k > max_lag()) return 0.0;
    return values_[static_cast<std::size_t>(k - min_lag())];
}

double IslReport::auto_part() const {
    double s = 0.0;
    for (double v : auto_terms) s += v;
    return s;
}

double IslReport::cross_part() const {
    double s = 0.0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            if (p != q) s += cross_terms[p][q];
    return s;
}

CorrelationProfile aperiodic_correlation(const BinarySequence& a, const BinarySequence& b) {
    require_same_length(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(2 * n - 1));
    for (std::int64_t k = 1 - n; k < n; ++k) values.push_back(static_cast<double>(correlate_at(a, b, k)));
    return CorrelationProfile(a.size(), std::move(values));
}

double sum_of_squares_auto(const BinarySequence& a) {
    if (a.empty()) throw std::invalid_argument("empty sequence");
    const auto n = static_cast<std::int64_t>(a.size());
    // X(-k) = X(k) for a real sequence, so only positive lags are needed.
    std::int64_t e = 0;
    for (std::int64_t k = 1; k < n; ++k) {
        const std::int64_t x = correlate_at(a, a, k);
        e += x * x;
    }
    return static_cast<double>(2 * e);
}

double sum_of_squares_cross(const BinarySequence& a, const BinarySequence& b) {
    require_same_length(a, b);
    return static_cast<double>(integer_energy(a, b));
}

IslReport isl_direct(const std::vector<BinarySequence>& set) {
    if (set.empty()) throw std::invalid_argument("ISL of an empty sequence set");
    const std::size_t m = set.size();
    for (const auto& s : set) require_same_length(set.front(), s);

    IslReport r;
    r.n = set.front().size();
    r.m = m;
    r.auto_terms.resize(m);
    r.cross_terms.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t p = 0; p < m; ++p) r.auto_terms[p] = sum_of_squares_auto(set[p]);
    // X_pq(k) = X_qp(-k), so each unordered pair is computed once and mirrored.
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) {
            const double v = sum_of_squares_cross(set[p], set[q]);
            r.cross_terms[p][q] = v;
            r.cross_terms[q][p] = v;
        }
    r.total = r.auto_part() + r.cross_part();
    const double dn = static_cast<double>(r.n);
    r.normalized = r.total / (dn * dn);
    return r;
}

std::vector<double> periodic_correlation(const BinarySequence& a) {
    if (a.empty()) throw std::invalid_argument("empty sequence");
    const auto n = static_cast<std::int64_t>(a.size());
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k < n; ++k)
        out.push_back(static_cast<double>(correlate_at(a, a, k) + correlate_at(a, a, k - n)));
    return out;
}

}  // namespace rls
