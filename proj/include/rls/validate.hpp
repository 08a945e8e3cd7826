// Self-check harness behind `rls_isl validate`: runs every fast/closed-form
// path against its direct twin up to a maximum length.

#pragma once

#include "rls/spectral.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rls {

struct ValidationOptions {
    std::uint64_t max_n = 61;
    std::uint64_t seed = 1;
    WCaseConstants w_constants{};
    std::size_t dilog_terms = 1'000'000;
    std::size_t dilog_points = 1000;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string worst_input;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace rls
