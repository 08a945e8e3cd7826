#include "rls/optimizer.hpp"

#include "rls/asymptotic.hpp"
#include "rls/correlation.hpp"
#include "rls/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rls {

namespace {

double objective(std::span<const double> f) { return asym_isl(f).total; }

bool improves(double candidate, double best) {
    return candidate < best - 1e-12 * std::max(1.0, std::abs(best));
}

}  // namespace

std::size_t default_resolution(std::size_t m, double budget) {
    if (m == 0) throw std::invalid_argument("M must be at least 1");
    const double dm = static_cast<double>(m);
    if (std::pow(64.0, dm) <= budget) return 64;
    auto r = static_cast<std::size_t>(std::floor(std::pow(budget, 1.0 / dm) + 1e-9));
    return std::max<std::size_t>(r, 8);
}

OptResult grid_search(std::size_t m, std::size_t resolution, double budget) {
    if (m == 0) throw std::invalid_argument("M must be at least 1");
    if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
    const double lattice = std::pow(static_cast<double>(resolution), static_cast<double>(m));
    if (lattice > budget)
        throw std::invalid_argument("grid of " + std::to_string(resolution) + "^" + std::to_string(m) +
                                    " points exceeds the search budget");

    const double step = 1.0 / static_cast<double>(resolution);
    // Non-decreasing index tuples, enumerated in lexicographic order so the
    // first minimum found is the lexicographically smallest one.
    std::vector<std::size_t> idx(m, 0);
    std::vector<double> point(m, 0.0);
    std::vector<double> best_point;
    double best = 0.0;
    bool have_best = false;
    while (true) {
        for (std::size_t i = 0; i < m; ++i) point[i] = static_cast<double>(idx[i]) * step;
        const double v = objective(point);
        if (!have_best || improves(v, best)) {
            best = v;
            best_point = point;
            have_best = true;
        }
        std::size_t pos = m;
        while (pos > 0 && idx[pos - 1] == resolution - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < m; ++i) idx[i] = idx[pos - 1];
    }

    OptResult r;
    r.fractions = std::move(best_point);
    r.asym_value = best;
    r.grid_resolution = resolution;
    return r;
}

std::vector<double> refine_local(std::span<const double> fractions, double tol, double initial_step,
                                 std::size_t* accepted_moves) {
    if (fractions.empty()) throw std::invalid_argument("nothing to refine");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    std::vector<double> x(fractions.begin(), fractions.end());
    for (double f : x)
        if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("starting point must lie in [0,1]^M");

    double value = objective(x);
    std::size_t moves = 0;
    for (double step = initial_step; step >= tol; step *= 0.5) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i < x.size(); ++i) {
                for (double dir : {-1.0, 1.0}) {
                    const double old = x[i];
                    x[i] = std::clamp(old + dir * step, 0.0, 1.0);
                    const double v = objective(x);
                    if (x[i] != old && improves(v, value)) {
                        value = v;
                        moved = true;
                        ++moves;
                    } else {
                        x[i] = old;
                    }
                }
            }
        }
    }
    if (accepted_moves) *accepted_moves += moves;
    return x;
}

OptResult optimize_rotations(std::size_t m, std::size_t resolution, double tol, double budget) {
    OptResult r = grid_search(m, resolution, budget);
    const double step = 1.0 / static_cast<double>(resolution);
    std::vector<double> x = r.fractions;
    // Re-run until sorting no longer exposes a better coordinate move.
    for (int pass = 0; pass < 64; ++pass) {
        std::vector<double> next = refine_local(x, tol, step, &r.refinement_steps);
        std::sort(next.begin(), next.end());
        const bool stable = next == x;
        x = std::move(next);
        if (stable) break;
    }
    r.fractions = std::move(x);
    r.asym_value = objective(r.fractions);
    return r;
}

OptResult exact_validate(OptResult result, std::uint64_t n) {
    if (!is_odd_prime(n)) throw std::invalid_argument("n must be an odd prime");
    const RotationSet rotations = bind_rotations(result.fractions, n);
    const IslReport report = isl_direct(rotated_legendre_set(rotations));
    ExactCheck check;
    check.n = n;
    check.offsets = rotations.offsets;
    check.realized_fractions = rotations.fractions;
    check.total = report.total;
    check.normalized = report.normalized;
    result.exact_check = std::move(check);
    return result;
}

}  // namespace rls
