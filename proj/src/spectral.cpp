#include "rls/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rls {

namespace {

template <typename T>
T pairwise_impl(std::span<const T> terms) {
    if (terms.empty()) return T{};
    if (terms.size() <= 8) {
        T s{};
        for (const T& t : terms) s += t;
        return s;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_impl(terms.first(half)) + pairwise_impl(terms.subspan(half));
}

void require_odd(std::size_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("odd length required (got " + std::to_string(n) + ")");
}

void require_pair(const BinarySequence& a, const BinarySequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sequence length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    require_odd(a.size());
}

std::int64_t reduce(std::int64_t k, std::size_t n) {
    const auto sn = static_cast<std::int64_t>(n);
    std::int64_t r = k % sn;
    return r < 0 ? r + sn : r;
}

cplx root(std::int64_t k, std::size_t n) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(k, n)) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

double squared_product_sum(std::span<const cplx> qa, std::span<const cplx> qb) {
    std::vector<double> terms(qa.size());
    for (std::size_t j = 0; j < qa.size(); ++j) terms[j] = std::norm(qa[j]) * std::norm(qb[j]);
    return pairwise_sum(std::span<const double>(terms));
}

std::vector<cplx> values_at(const BinarySequence& seq, std::span<const cplx> points) {
    std::vector<cplx> out(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) out[j] = gf_eval(seq, points[j]);
    return out;
}

std::vector<cplx> negated(std::span<const cplx> points) {
    std::vector<cplx> out(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) out[j] = -points[j];
    return out;
}

// Closed forms per pattern, with the triple / pair index first.
cplx w_case_a(cplx ep, double n, const WCaseConstants& c) {
    return c.a_scale * (c.a_quartic * n * n * n * n + c.a_quadratic * n * n) / (ep * ep);
}
cplx w_case_b(cplx ep, cplx eq, double n, const WCaseConstants& c) {
    const cplx d = eq - ep;
    return c.b_scale * n * n * (eq + ep) / (ep * d * d);
}
cplx w_case_c(cplx ep, cplx eq, cplx er, double n, const WCaseConstants& c) {
    return c.c_scale * n * n / ((eq - ep) * (er - ep));
}
cplx w_case_d(cplx ep, cplx eq, double n, const WCaseConstants& c) {
    const cplx d = ep - eq;
    return c.d_scale * n * n / (d * d);
}

}  // namespace

std::vector<cplx> roots_of_unity(std::size_t n) {
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = root(static_cast<std::int64_t>(j), n);
    return out;
}

cplx pairwise_sum(std::span<const cplx> terms) { return pairwise_impl(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise_impl(terms); }

SpectralEvaluation evaluate_spectrum(const BinarySequence& seq) {
    SpectralEvaluation ev;
    ev.n = seq.size();
    const auto roots = roots_of_unity(ev.n);
    ev.at_roots = values_at(seq, roots);
    ev.at_negated_roots = values_at(seq, negated(roots));
    return ev;
}

cplx gf_eval(const BinarySequence& seq, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = seq.size(); j-- > 0;) acc = acc * z + static_cast<double>(seq[j]);
    return acc;
}

cplx gf_eval(std::span<const double> coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
    return acc;
}

cplx legendre_gf_closed_form(std::uint64_t n, std::int64_t j, int ell_j) {
    if (!is_odd_prime(n)) throw std::invalid_argument("n must be an odd prime");
    if (reduce(j, n) == 0) return {1.0, 0.0};
    if (ell_j != 1 && ell_j != -1) throw std::invalid_argument("Legendre symbol value must be +1 or -1");
    const double g = ell_j * std::sqrt(static_cast<double>(n));
    if (n % 4 == 1) return {1.0 + g, 0.0};
    return {1.0, g};
}

double s_prime(const BinarySequence& a, const BinarySequence& b) {
    require_pair(a, b);
    const auto roots = roots_of_unity(a.size());
    return squared_product_sum(values_at(a, roots), values_at(b, roots));
}

double s_double_prime_direct(const BinarySequence& a, const BinarySequence& b) {
    require_pair(a, b);
    const auto points = negated(roots_of_unity(a.size()));
    return squared_product_sum(values_at(a, points), values_at(b, points));
}

cplx lagrange_negated_eval(std::span<const cplx> at_roots, std::int64_t j) {
    const std::size_t n = at_roots.size();
    require_odd(n);
    const cplx ej = root(j, n);
    std::vector<cplx> terms(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx ek = root(static_cast<std::int64_t>(k), n);
        terms[k] = ek / (ej + ek) * at_roots[k];
    }
    return 2.0 / static_cast<double>(n) * pairwise_sum(std::span<const cplx>(terms));
}

double s_double_prime_interpolated(const BinarySequence& a, const BinarySequence& b) {
    require_pair(a, b);
    const std::size_t n = a.size();
    const auto roots = roots_of_unity(n);
    const auto qa = values_at(a, roots);
    const auto qb = values_at(b, roots);
    std::vector<cplx> na(n), nb(n);
    for (std::size_t j = 0; j < n; ++j) {
        na[j] = lagrange_negated_eval(qa, static_cast<std::int64_t>(j));
        nb[j] = lagrange_negated_eval(qb, static_cast<std::int64_t>(j));
    }
    return squared_product_sum(na, nb);
}

double xx_cross_spectral(const BinarySequence& a, const BinarySequence& b) {
    require_pair(a, b);
    return (s_prime(a, b) + s_double_prime_direct(a, b)) / (2.0 * static_cast<double>(a.size()));
}

double xx_auto_spectral(const BinarySequence& a) {
    const double n = static_cast<double>(a.size());
    return xx_cross_spectral(a, a) - n * n;
}

WIndex::WIndex(std::int64_t k1_, std::int64_t l1_, std::int64_t k2_, std::int64_t l2_, std::size_t n_)
    : n(n_) {
    require_odd(n);
    k1 = reduce(k1_, n);
    l1 = reduce(l1_, n);
    k2 = reduce(k2_, n);
    l2 = reduce(l2_, n);
}

WPattern classify(const WIndex& idx) {
    std::array<std::int64_t, 4> v{idx.k1, idx.l1, idx.k2, idx.l2};
    std::sort(v.begin(), v.end());
    const int distinct = 1 + (v[1] != v[0]) + (v[2] != v[1]) + (v[3] != v[2]);
    switch (distinct) {
        case 1: return WPattern::A;
        case 2: return (v[1] == v[2]) ? WPattern::B : WPattern::D;
        case 3: return WPattern::C;
        default: return WPattern::E;
    }
}

char pattern_name(WPattern p) { return static_cast<char>('A' + static_cast<int>(p)); }

cplx w_closed_form(const WIndex& idx, const WCaseConstants& constants) {
    if (idx.n == 0 || idx.n % 2 == 0) throw std::invalid_argument("W requires odd n");
    // W is symmetric in its four arguments, so only the multiset matters:
    // sort it and pick the canonical representative of each pattern.
    std::array<std::int64_t, 4> v{idx.k1, idx.l1, idx.k2, idx.l2};
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(idx.n);
    auto e = [&](std::int64_t k) { return root(k, idx.n); };

    switch (classify(idx)) {
        case WPattern::A:
            return w_case_a(e(v[0]), n, constants);
        case WPattern::B: {
            // Sorted triple-plus-single: the middle entries belong to the triple.
            const std::int64_t p = v[1];
            const std::int64_t q = (v[0] != p) ? v[0] : v[3];
            return w_case_b(e(p), e(q), n, constants);
        }
        case WPattern::C: {
            std::int64_t p = 0;
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] == v[i + 1]) p = v[i];
            std::array<std::int64_t, 2> singles{};
            std::size_t s = 0;
            for (std::int64_t x : v)
                if (x != p) singles[s++] = x;
            return w_case_c(e(p), e(singles[0]), e(singles[1]), n, constants);
        }
        case WPattern::D:
            return w_case_d(e(v[0]), e(v[3]), n, constants);
        case WPattern::E:
            return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

cplx w_direct(const WIndex& idx) {
    if (idx.n == 0 || idx.n % 2 == 0) throw std::invalid_argument("W requires odd n");
    const auto roots = roots_of_unity(idx.n);
    const cplx ek1 = root(idx.k1, idx.n), el1 = root(idx.l1, idx.n);
    const cplx ek2 = root(idx.k2, idx.n), el2 = root(idx.l2, idx.n);
    std::vector<cplx> terms(idx.n);
    for (std::size_t j = 0; j < idx.n; ++j) {
        const cplx z = roots[j];
        terms[j] = z * z / ((z + ek1) * (z + el1) * (z + ek2) * (z + el2));
    }
    return pairwise_sum(std::span<const cplx>(terms));
}

cplx SplitTerms::s_double_prime() const {
    const double dn = static_cast<double>(n);
    return 16.0 / (dn * dn * dn * dn) * sum();
}

SplitTerms alpha_beta_gamma_delta(const BinarySequence& a, const BinarySequence& b, std::size_t cap) {
    require_pair(a, b);
    const std::size_t n = a.size();
    if (n > cap)
        throw std::invalid_argument("alpha/beta/gamma/delta split is O(N^3); N=" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
    const WCaseConstants k{};
    const double dn = static_cast<double>(n);
    const auto e = roots_of_unity(n);
    const auto qa = values_at(a, e);
    const auto qb = values_at(b, e);
    auto cj = [](cplx z) { return std::conj(z); };

    SplitTerms out;
    out.n = n;

    // alpha: all four indices equal. e_p^2 cancels the 1/e_p^2 of W_A.
    {
        const double w = k.a_scale * (k.a_quartic * dn * dn * dn * dn + k.a_quadratic * dn * dn);
        out.alpha = w * squared_product_sum(qa, qb);
    }

    // beta: p three times, q once; one term per position of q.
    // delta: p twice, q twice; ordered (p, q) covers each tuple with p in slot k1.
    {
        std::vector<cplx> beta_rows(n), delta_rows(n);
        for (std::size_t p = 0; p < n; ++p) {
            const cplx ep = e[p];
            const double ap = std::norm(qa[p]), bp = std::norm(qb[p]);
            cplx beta_row{}, delta_row{};
            for (std::size_t q = 0; q < n; ++q) {
                if (q == p) continue;
                const cplx eq = e[q];
                const cplx bracket_b = ep * ep * ap * qb[p] * cj(qb[q]) + ep * eq * ap * qb[q] * cj(qb[p]) +
                                       ep * ep * qa[p] * cj(qa[q]) * bp + eq * ep * qa[q] * cj(qa[p]) * bp;
                beta_row += w_case_b(ep, eq, dn, k) * bracket_b;

                const cplx bracket_d = ep * eq * ap * std::norm(qb[q]) +
                                       ep * ep * qa[p] * cj(qa[q]) * qb[p] * cj(qb[q]) +
                                       ep * eq * qa[p] * cj(qa[q]) * qb[q] * cj(qb[p]);
                delta_row += w_case_d(ep, eq, dn, k) * bracket_d;
            }
            beta_rows[p] = beta_row;
            delta_rows[p] = delta_row;
        }
        out.beta = pairwise_sum(std::span<const cplx>(beta_rows));
        out.delta = pairwise_sum(std::span<const cplx>(delta_rows));
    }

    // gamma: p twice, q and r once each. There are twelve orderings of
    // {p,p,q,r}; summing over ordered (q, r) visits each ordering twice, so
    // the twelve-term bracket is halved.
    {
        std::vector<cplx> rows(n);
        for (std::size_t p = 0; p < n; ++p) {
            const cplx ep = e[p];
            const double ap = std::norm(qa[p]), bp = std::norm(qb[p]);
            cplx row{};
            for (std::size_t q = 0; q < n; ++q) {
                if (q == p) continue;
                const cplx eq = e[q];
                cplx inner{};
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cplx er = e[r];
                    const cplx bracket =
                        ep * eq * ap * qb[q] * cj(qb[r]) +                  // (p,p,q,r)
                        ep * er * ap * qb[r] * cj(qb[q]) +                  // (p,p,r,q)
                        ep * ep * qa[p] * cj(qa[q]) * qb[p] * cj(qb[r]) +   // (p,q,p,r)
                        ep * ep * qa[p] * cj(qa[r]) * qb[p] * cj(qb[q]) +   // (p,r,p,q)
                        ep * er * qa[p] * cj(qa[q]) * qb[r] * cj(qb[p]) +   // (p,q,r,p)
                        ep * eq * qa[p] * cj(qa[r]) * qb[q] * cj(qb[p]) +   // (p,r,q,p)
                        eq * er * qa[q] * cj(qa[p]) * qb[r] * cj(qb[p]) +   // (q,p,r,p)
                        er * eq * qa[r] * cj(qa[p]) * qb[q] * cj(qb[p]) +   // (r,p,q,p)
                        eq * ep * qa[q] * cj(qa[r]) * bp +                  // (q,r,p,p)
                        er * ep * qa[r] * cj(qa[q]) * bp +                  // (r,q,p,p)
                        eq * ep * qa[q] * cj(qa[p]) * qb[p] * cj(qb[r]) +   // (q,p,p,r)
                        er * ep * qa[r] * cj(qa[p]) * qb[p] * cj(qb[q]);    // (r,p,p,q)
                    inner += w_case_c(ep, eq, er, dn, k) * bracket;
                }
                row += inner;
            }
            rows[p] = 0.5 * row;
        }
        out.gamma = pairwise_sum(std::span<const cplx>(rows));
    }
    return out;
}

}  // namespace rls
