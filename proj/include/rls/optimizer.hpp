// Minimization of the asymptotic set ISL over rotation fractions, with exact
// validation on a concrete prime length.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rls {

struct ExactCheck {
    std::uint64_t n = 0;
    std::vector<std::int64_t> offsets;
    std::vector<double> realized_fractions;  // offsets / n
    double total = 0.0;
    double normalized = 0.0;
};

struct OptResult {
    std::vector<double> fractions;  // ascending
    double asym_value = 0.0;
    std::size_t grid_resolution = 0;
    std::size_t refinement_steps = 0;
    std::optional<ExactCheck> exact_check;
};

inline constexpr double default_grid_budget = 1e8;

// Exhaustive search of the sorted lattice tuples {0, 1/R, ..., (R-1)/R}^M.
// Ties resolve to the lexicographically smallest tuple. Throws
// std::invalid_argument when R^M exceeds `budget`.
OptResult grid_search(std::size_t m, std::size_t resolution, double budget = default_grid_budget);

// Coordinate descent on the asymptotic ISL, step halving from
// `initial_step` until it falls below `tol`. Never increases the objective.
std::vector<double> refine_local(std::span<const double> fractions, double tol,
                                 double initial_step = 1.0 / 64.0,
                                 std::size_t* accepted_moves = nullptr);

// grid_search followed by refine_local, sorted.
OptResult optimize_rotations(std::size_t m, std::size_t resolution, double tol,
                             double budget = default_grid_budget);

// Largest resolution not above 64 (and at least 8) whose R^M fits the budget.
std::size_t default_resolution(std::size_t m, double budget = default_grid_budget);

// Bind fractions to n, build the rotated Legendre set and record its exact ISL.
OptResult exact_validate(OptResult result, std::uint64_t n);

}  // namespace rls
