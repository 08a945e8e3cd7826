#include "rls/validate.hpp"

#include "rls/asymptotic.hpp"
#include "rls/correlation.hpp"
#include "rls/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace rls {

namespace {

class Tracker {
public:
    Tracker(std::string name, double tolerance) {
        result_.name = std::move(name);
        result_.tolerance = tolerance;
    }

    void record(double error, const std::string& input) {
        const double e = std::isnan(error) ? INFINITY : error;
        if (result_.worst_input.empty() || e > result_.max_error) {
            result_.max_error = e;
            result_.worst_input = input;
        }
        if (!(error <= result_.tolerance)) result_.passed = false;
    }

    void fail(const std::string& input) {
        result_.passed = false;
        if (result_.worst_input.empty()) result_.worst_input = input;
    }

    CheckResult done() { return result_; }

private:
    CheckResult result_;
};

BinarySequence random_sequence(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int> v(n);
    for (auto& x : v) x = coin(rng) ? 1 : -1;
    return BinarySequence(std::move(v));
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::string label(const char* key, std::uint64_t n, const std::string& extra = {}) {
    std::ostringstream os;
    os << key << "=" << n;
    if (!extra.empty()) os << " " << extra;
    return os.str();
}

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= hi; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

CheckResult check_spectral_identity(const ValidationOptions& o, std::mt19937_64& rng) {
    Tracker t("spectral-vs-direct", 1e-9);
    const std::uint64_t hi = std::min<std::uint64_t>(o.max_n, 199);
    for (std::uint64_t n = 3; n <= hi; n += 2)
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = random_sequence(n, rng);
            const auto b = random_sequence(n, rng);
            t.record(rel_err(xx_cross_spectral(a, b), sum_of_squares_cross(a, b)),
                     label("N", n, "cross trial=" + std::to_string(trial)));
            t.record(rel_err(xx_auto_spectral(a), sum_of_squares_auto(a)),
                     label("N", n, "auto trial=" + std::to_string(trial)));
        }
    return t.done();
}

// Draws an index tuple with the requested equality pattern, in random order.
WIndex random_tuple(WPattern pattern, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(n) - 1);
    std::vector<std::int64_t> distinct;
    const std::size_t needed = pattern == WPattern::A ? 1
                               : pattern == WPattern::B || pattern == WPattern::D ? 2
                               : pattern == WPattern::C ? 3
                                                        : 4;
    while (distinct.size() < needed) {
        const auto v = pick(rng);
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    }
    std::vector<std::int64_t> t;
    switch (pattern) {
        case WPattern::A: t = {distinct[0], distinct[0], distinct[0], distinct[0]}; break;
        case WPattern::B: t = {distinct[0], distinct[0], distinct[0], distinct[1]}; break;
        case WPattern::C: t = {distinct[0], distinct[0], distinct[1], distinct[2]}; break;
        case WPattern::D: t = {distinct[0], distinct[0], distinct[1], distinct[1]}; break;
        case WPattern::E: t = distinct; break;
    }
    std::shuffle(t.begin(), t.end(), rng);
    return WIndex(t[0], t[1], t[2], t[3], n);
}

CheckResult check_w_twins(const ValidationOptions& o, std::mt19937_64& rng) {
    Tracker t("w-closed-form-vs-direct", 1e-8);
    const std::uint64_t hi = std::min<std::uint64_t>(o.max_n, 101);
    constexpr WPattern patterns[] = {WPattern::A, WPattern::B, WPattern::C, WPattern::D, WPattern::E};
    for (std::uint64_t n = 5; n <= hi; n += 2)
        for (int trial = 0; trial < 200; ++trial) {
            const WPattern pattern = patterns[trial % 5];
            const WIndex idx = random_tuple(pattern, n, rng);
            const cplx direct = w_direct(idx);
            const double err = std::abs(w_closed_form(idx, o.w_constants) - direct) / (1.0 + std::abs(direct));
            std::ostringstream os;
            os << "N=" << n << " case " << pattern_name(pattern) << " (" << idx.k1 << "," << idx.l1 << ","
               << idx.k2 << "," << idx.l2 << ")";
            t.record(err, os.str());
        }
    return t.done();
}

CheckResult check_split(const ValidationOptions& o, std::mt19937_64& rng) {
    Tracker t("alpha-beta-gamma-delta", 1e-6);
    for (std::uint64_t n : odd_primes_upto(std::min<std::uint64_t>(o.max_n, default_split_cap))) {
        std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(n) - 1);
        const auto base = legendre_sequence(n);
        for (int trial = 0; trial < 2; ++trial) {
            const auto ta = pick(rng), tb = pick(rng);
            const auto a = rotate(base, ta), b = rotate(base, tb);
            const SplitTerms s = alpha_beta_gamma_delta(a, b);
            const double direct = s_double_prime_direct(a, b);
            const cplx rebuilt = s.s_double_prime();
            const double err = std::max(rel_err(rebuilt.real(), direct),
                                        std::abs(rebuilt.imag()) / std::max(1.0, std::abs(direct)));
            t.record(err, label("N", n, "ta=" + std::to_string(ta) + " tb=" + std::to_string(tb)));
        }
    }
    return t.done();
}

CheckResult check_gauss_sum(const ValidationOptions& o) {
    Tracker t("gauss-sum", 1e-6);
    for (std::uint64_t n : odd_primes_upto(o.max_n)) {
        const auto ell = legendre_sequence(n);
        const auto roots = roots_of_unity(n);
        for (std::uint64_t j = 1; j < n; ++j) {
            const cplx q = gf_eval(ell, roots[j]);
            const cplx closed = legendre_gf_closed_form(n, static_cast<std::int64_t>(j), ell[j]);
            const double dn = static_cast<double>(n);
            // |Q|^2 is N + 1 only on the imaginary branch; the real branch gives (1 +- sqrt N)^2.
            const double err = std::max(rel_err(std::norm(q), std::norm(closed)), std::abs(q - closed) / std::sqrt(dn));
            t.record(err, label("N", n, "j=" + std::to_string(j)));
            // The offset sits on the real axis for N = 1 (mod 4), imaginary otherwise.
            const bool real_branch = std::abs(q.imag()) < std::abs(q.real() - 1.0);
            if (real_branch != (n % 4 == 1)) t.fail(label("N", n, "j=" + std::to_string(j) + " branch"));
        }
    }
    return t.done();
}

CheckResult check_periodic_bound(const ValidationOptions& o) {
    Tracker t("periodic-bound", 0.0);
    for (std::uint64_t n : odd_primes_upto(o.max_n)) {
        const auto pc = periodic_correlation(legendre_sequence(n));
        for (std::size_t k = 0; k < pc.size(); ++k) {
            const double excess = std::max(0.0, std::abs(pc[k]) - 3.0);
            const double frac = std::abs(pc[k] - std::round(pc[k]));
            t.record(excess + frac, label("N", n, "k=" + std::to_string(k + 1)));
        }
    }
    return t.done();
}

CheckResult check_dilog(const ValidationOptions& o) {
    Tracker t("dilogarithm-series", 1e-6);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const auto points = static_cast<double>(o.dilog_points);
    for (std::size_t i = 0; i < o.dilog_points; ++i) {
        const double theta = -two_pi + 2.0 * two_pi * (static_cast<double>(i) + 0.5) / points;
        const double err = std::abs(re_dilog_unit_circle(theta) - re_dilog_series(theta, o.dilog_terms));
        std::ostringstream os;
        os.precision(17);
        os << "theta=" << theta;
        t.record(err, os.str());
    }
    return t.done();
}

CheckResult check_lagrange(const ValidationOptions& o, std::mt19937_64& rng) {
    Tracker t("lagrange-interpolation", 1e-8);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const std::uint64_t hi = std::min<std::uint64_t>(o.max_n, 199);
    for (std::uint64_t n = 3; n <= hi; n += 2) {
        std::vector<double> c(n);
        for (auto& x : c) x = coef(rng);
        const auto roots = roots_of_unity(n);
        std::vector<cplx> at(n);
        for (std::size_t k = 0; k < n; ++k) at[k] = gf_eval(c, roots[k]);
        for (std::size_t j = 0; j < n; ++j) {
            const cplx direct = gf_eval(c, -roots[j]);
            const cplx interp = lagrange_negated_eval(at, static_cast<std::int64_t>(j));
            t.record(std::abs(interp - direct) / (1.0 + std::abs(direct)), label("N", n, "j=" + std::to_string(j)));
        }
    }
    return t.done();
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::vector<CheckResult> out;
    out.push_back(check_spectral_identity(options, rng));
    out.push_back(check_w_twins(options, rng));
    out.push_back(check_split(options, rng));
    out.push_back(check_gauss_sum(options));
    out.push_back(check_periodic_bound(options));
    out.push_back(check_dilog(options));
    out.push_back(check_lagrange(options, rng));
    return out;
}

}  // namespace rls
