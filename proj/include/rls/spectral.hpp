// Generating-function machinery for sums of squared correlations.
//
// For real sequences a, b of odd length N with generating functions
// Q_a(z) = sum_j a_j z^j, the cross sidelobe energy satisfies
//
//   XX_ab = (S' + S'') / (2N),
//   S'  = sum_j |Q_a(e_j) Q_b(e_j)|^2,   e_j = exp(2 pi i j / N),
//   S'' = sum_j |Q_a(-e_j) Q_b(-e_j)|^2.
//
// S'' can be evaluated directly or through Lagrange interpolation from the
// values at the roots of unity, which expands into the four-index kernel W
// and the alpha/beta/gamma/delta split. Every closed form below has a direct
// twin so the two can be compared.

#pragma once

#include "rls/seqcore.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rls {

using cplx = std::complex<double>;

// exp(2 pi i j / n) for j = 0 .. n-1, each computed directly from its angle.
std::vector<cplx> roots_of_unity(std::size_t n);

// Pairwise (tree) summation.
cplx pairwise_sum(std::span<const cplx> terms);
double pairwise_sum(std::span<const double> terms);

struct SpectralEvaluation {
    std::size_t n = 0;
    std::vector<cplx> at_roots;          // Q(e_j)
    std::vector<cplx> at_negated_roots;  // Q(-e_j)
};

SpectralEvaluation evaluate_spectrum(const BinarySequence& seq);

cplx gf_eval(const BinarySequence& seq, cplx z);
cplx gf_eval(std::span<const double> coeffs, cplx z);

// Gauss-sum value of the Legendre generating function at e_j.
cplx legendre_gf_closed_form(std::uint64_t n, std::int64_t j, int ell_j);

double s_prime(const BinarySequence& a, const BinarySequence& b);
double s_double_prime_direct(const BinarySequence& a, const BinarySequence& b);

// Q(-e_j) from the N values Q(e_k), N odd:
//   Q(-e_j) = (2/N) sum_k e_k / (e_j + e_k) Q(e_k).
cplx lagrange_negated_eval(std::span<const cplx> at_roots, std::int64_t j);

// S'' with Q(-e_j) rebuilt by lagrange_negated_eval.
double s_double_prime_interpolated(const BinarySequence& a, const BinarySequence& b);

double xx_cross_spectral(const BinarySequence& a, const BinarySequence& b);
// Auto sidelobe energy: the cross identity with a = b minus the N^2 mainlobe.
double xx_auto_spectral(const BinarySequence& a);

// Four-index kernel argument, indices reduced mod an odd n.
struct WIndex {
    std::int64_t k1 = 0, l1 = 0, k2 = 0, l2 = 0;
    std::size_t n = 0;

    WIndex() = default;
    WIndex(std::int64_t k1, std::int64_t l1, std::int64_t k2, std::int64_t l2, std::size_t n);
};

// Equality pattern of the index multiset:
// A all equal, B three equal, C one pair + two singles, D two pairs, E distinct.
enum class WPattern { A, B, C, D, E };

WPattern classify(const WIndex& idx);
char pattern_name(WPattern p);

// Scalar constants of the W closed forms. Exposed so the validation harness
// can be mutation-tested; production code always uses the defaults.
struct WCaseConstants {
    double a_scale = 1.0 / 16.0;  // A: a_scale * (a_quartic N^4 + a_quadratic N^2) / e_p^2
    double a_quartic = 1.0 / 3.0;
    double a_quadratic = 2.0 / 3.0;
    double b_scale = 1.0 / 8.0;   // B: b_scale N^2 (e_q + e_p) / (e_p (e_q - e_p)^2)
    double c_scale = -1.0 / 4.0;  // C: c_scale N^2 / ((e_q - e_p)(e_r - e_p))
    double d_scale = -1.0 / 2.0;  // D: d_scale N^2 / (e_p - e_q)^2
};

cplx w_closed_form(const WIndex& idx, const WCaseConstants& constants = {});

// sum_j e_j^2 / ((e_j + e_k1)(e_j + e_l1)(e_j + e_k2)(e_j + e_l2))
cplx w_direct(const WIndex& idx);

struct SplitTerms {
    std::size_t n = 0;
    cplx alpha, beta, gamma, delta;

    cplx sum() const { return alpha + beta + gamma + delta; }
    // (16 / N^4) (alpha + beta + gamma + delta)
    cplx s_double_prime() const;
};

inline constexpr std::size_t default_split_cap = 61;

// The S'' expansion grouped by W pattern (A..D; E vanishes). gamma is an
// O(N^3) sum, so lengths above `cap` are rejected.
SplitTerms alpha_beta_gamma_delta(const BinarySequence& a, const BinarySequence& b,
                                  std::size_t cap = default_split_cap);

}  // namespace rls
