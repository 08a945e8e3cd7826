#include "rls/validate.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rls;

namespace {

ValidationOptions quick() {
    ValidationOptions o;
    o.max_n = 61;
    o.dilog_points = 40;
    return o;
}

const CheckResult& find(const std::vector<CheckResult>& all, const std::string& name) {
    const auto it = std::find_if(all.begin(), all.end(), [&](const CheckResult& c) { return c.name == name; });
    REQUIRE(it != all.end());
    return *it;
}

}  // namespace

TEST_CASE("all checks pass up to 61") {
    const auto results = run_validation(quick());
    CHECK(results.size() == 7);
    for (const auto& c : results) {
        INFO(c.name << " max_error=" << c.max_error << " worst=" << c.worst_input);
        CHECK(c.passed);
        CHECK(c.max_error <= c.tolerance);
        CHECK_FALSE(c.worst_input.empty());
    }
}

TEST_CASE("a corrupted W case constant fails the W check by name") {
    auto o = quick();
    o.w_constants.c_scale = -0.25 * 1.001;
    const auto results = run_validation(o);
    const auto& w = find(results, "w-closed-form-vs-direct");
    CHECK_FALSE(w.passed);
    CHECK(w.worst_input.find("case C") != std::string::npos);
    // Nothing else depends on the mutated constants.
    for (const auto& c : results)
        if (c.name != w.name) CHECK(c.passed);
}

TEST_CASE("corrupting case A or D is caught too") {
    for (int which = 0; which < 2; ++which) {
        auto o = quick();
        if (which == 0) o.w_constants.a_quadratic = 0.7;
        else o.w_constants.d_scale = -0.49;
        const auto results = run_validation(o);
        const auto& w = find(results, "w-closed-form-vs-direct");
        INFO(w.worst_input);
        CHECK_FALSE(w.passed);
        CHECK(w.worst_input.find(which == 0 ? "case A" : "case D") != std::string::npos);
    }
}

TEST_CASE("validation is reproducible for a fixed seed") {
    auto o = quick();
    o.max_n = 15;
    const auto a = run_validation(o);
    const auto b = run_validation(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].max_error == b[i].max_error);
        CHECK(a[i].worst_input == b[i].worst_input);
    }
}
