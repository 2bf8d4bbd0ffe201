#include <cmath>
#include <cstdio>
#include <limits>

#include "doctest.h"
#include "osclab/errors.hpp"
#include "osclab/json_io.hpp"
#include "osclab/step_function.hpp"

using namespace osclab;

namespace {
StepFunction chi_half() {
    return StepFunction(Interval(0.0, 1.0), {{0.5, 1.0}, {0.5, 0.0}});
}
} // namespace

TEST_CASE("Interval validates and measures") {
    const Interval J(0.25, 0.75);
    CHECK(J.length() == doctest::Approx(0.5));
    CHECK(J.midpoint() == doctest::Approx(0.5));
    CHECK(J.contains(0.25));
    CHECK(J.contains(0.75));
    CHECK_FALSE(J.contains(0.2));
    CHECK_THROWS_AS(Interval(0.5, 0.5), argument_error);
    CHECK_THROWS_AS(Interval(0.7, 0.3), argument_error);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), argument_error);
}

TEST_CASE("StepFunction constructor enforces the tiling invariants") {
    CHECK_THROWS_AS(StepFunction(Interval(0, 1), {{0.4, 1.0}, {0.4, 0.0}}), argument_error);
    CHECK_THROWS_AS(StepFunction(Interval(0, 1), {{1.0, 1.0}, {0.0, 0.0}}), argument_error);
    CHECK_THROWS_AS(StepFunction(Interval(0, 1), {{-0.5, 1.0}, {1.5, 0.0}}), argument_error);
    CHECK_THROWS_AS(StepFunction(Interval(0, 1), {{1.0, std::nan("")}}), argument_error);
    CHECK_THROWS_AS(StepFunction(Interval(0, 1), {}), argument_error);
    CHECK_NOTHROW(StepFunction(Interval(0, 1), {{0.5, 1.0}, {0.5 + 1e-13, 0.0}}));
}

TEST_CASE("value_at follows the half-open convention") {
    const StepFunction f = chi_half();
    CHECK(f.value_at(0.0) == 1.0);
    CHECK(f.value_at(0.499999) == 1.0);
    CHECK(f.value_at(0.5) == 0.0);  // breakpoint belongs to the right piece
    CHECK(f.value_at(1.0) == 0.0);  // domain end belongs to the last piece
    CHECK_THROWS_AS(f.value_at(1.5), domain_error);
}

TEST_CASE("breakpoints tile the domain exactly") {
    const StepFunction f = StepFunction::from_values({3.0, 1.0, 2.0});
    REQUIRE(f.breakpoints().size() == 4);
    CHECK(f.breakpoints().front() == 0.0);
    CHECK(f.breakpoints().back() == 1.0);  // exact, not accumulated
    CHECK(f.breakpoints()[1] == doctest::Approx(1.0 / 3));
    CHECK(f.size() == 3);
}

TEST_CASE("constant and from_values factories") {
    const StepFunction c = StepFunction::constant(2.5);
    CHECK(c.size() == 1);
    CHECK(c.value_at(0.7) == 2.5);
    const StepFunction f = StepFunction::from_values({1.0, 2.0}, Interval(0, 2));
    CHECK(f.segments()[0].len == doctest::Approx(1.0));
    CHECK(f.value_at(1.5) == 2.0);
}

TEST_CASE("normalized merges equal-valued neighbors") {
    const StepFunction f(Interval(0, 1), {{0.25, 1.0}, {0.25, 1.0}, {0.5, 0.0}});
    const StepFunction g = f.normalized();
    CHECK(g.size() == 2);
    CHECK(g.segments()[0].len == doctest::Approx(0.5));
    CHECK(g.segments()[0].val == 1.0);
    CHECK(g == chi_half());
}

TEST_CASE("map_values keeps the partition") {
    const StepFunction f = chi_half().map_values([](double v) { return 2 * v - 1; });
    CHECK(f.value_at(0.25) == 1.0);
    CHECK(f.value_at(0.75) == -1.0);
    CHECK(f.breakpoints() == chi_half().breakpoints());
}

TEST_CASE("cut_segments clips precisely") {
    const StepFunction f = chi_half();
    std::vector<Segment> out;
    cut_segments(f, Interval(0.25, 0.75), out);
    REQUIRE(out.size() == 2);
    CHECK(out[0].len == doctest::Approx(0.25));
    CHECK(out[0].val == 1.0);
    CHECK(out[1].len == doctest::Approx(0.25));
    CHECK(out[1].val == 0.0);

    cut_segments(f, Interval(0.6, 0.9), out);
    REQUIRE(out.size() == 1);
    CHECK(out[0].val == 0.0);

    // tiny overshoot is clamped, real overshoot rejected
    CHECK_NOTHROW(cut_segments(f, Interval(0.0, 1.0 + 1e-13), out));
    CHECK_THROWS_AS(cut_segments(f, Interval(-0.5, 0.5), out), domain_error);
}

TEST_CASE("restrict produces a function on the subinterval") {
    const StepFunction g = restrict(chi_half(), Interval(0.25, 0.75));
    CHECK(g.domain() == Interval(0.25, 0.75));
    CHECK(g.value_at(0.3) == 1.0);
    CHECK(g.value_at(0.6) == 0.0);
}

TEST_CASE("average_of and range_on") {
    const StepFunction f = chi_half();
    CHECK(average_of(f, Interval(0.0, 1.0)) == doctest::Approx(0.5));
    CHECK(average_of(f, Interval(0.0, 0.75)) == doctest::Approx(2.0 / 3));
    const auto [lo, hi] = range_on(f, Interval(0.0, 1.0));
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
    const auto [lo2, hi2] = range_on(f, Interval(0.6, 0.9));
    CHECK(lo2 == 0.0);
    CHECK(hi2 == 0.0);
}

TEST_CASE("JSON round trip and validation") {
    const StepFunction f = chi_half();
    const StepFunction g = step_function_from_json(step_function_to_json(f));
    CHECK(f == g);

    // domain defaults to [0,1]
    const StepFunction h =
        step_function_from_json(R"({"segments":[{"len":1.0,"val":3.5}]})");
    CHECK(h.domain() == Interval(0.0, 1.0));
    CHECK(h.value_at(0.5) == 3.5);

    CHECK_THROWS_AS(step_function_from_json("not json"), argument_error);
    CHECK_THROWS_AS(step_function_from_json(R"({"segments":[]})"), argument_error);
    CHECK_THROWS_AS(
        step_function_from_json(R"({"segments":[{"len":0.4,"val":1},{"len":0.4,"val":0}]})"),
        argument_error);
    // near-miss sums are rescaled proportionally
    const StepFunction k = step_function_from_json(
        R"({"segments":[{"len":0.5,"val":1},{"len":0.5000000001,"val":0}]})");
    CHECK(k.segments()[0].len + k.segments()[1].len == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("file I/O surfaces paths in errors") {
    const std::string path = "steps_roundtrip_tmp.json";
    save_step_function(chi_half(), path);
    CHECK(load_step_function(path) == chi_half());
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(load_step_function("no/such/dir/f.json"),
                         doctest::Contains("no/such/dir/f.json"), error);
}
