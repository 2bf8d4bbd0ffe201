#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "osclab/campaign.hpp"
#include "osclab/errors.hpp"
#include "osclab/transforms.hpp"

using namespace osclab;

namespace {

StepFunction chi_half() {
    return StepFunction(Interval(0.0, 1.0), {{0.5, 1.0}, {0.5, 0.0}});
}

// multiset of (value, total length), for equimeasurability checks
std::vector<std::pair<double, double>> mass_profile(const StepFunction& f) {
    std::vector<std::pair<double, double>> items;
    for (const auto& s : f.segments()) items.push_back({s.val, s.len});
    std::sort(items.begin(), items.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& it : items) {
        if (!merged.empty() && merged.back().first == it.first)
            merged.back().second += it.second;
        else
            merged.push_back(it);
    }
    return merged;
}

} // namespace

TEST_CASE("LipschitzPL validation and evaluation") {
    CHECK_THROWS_AS(LipschitzPL({}, {1.0}, 0.0), argument_error);
    CHECK_THROWS_AS(LipschitzPL({0.0}, {1.0}, 0.0), argument_error);
    CHECK_THROWS_AS(LipschitzPL({0.0, 0.0}, {1.0, 0.0, 1.0}, 0.0), argument_error);
    CHECK_THROWS_AS(LipschitzPL({0.0}, {1.5, 0.0}, 0.0), argument_error);

    // anchored tent: value 2 at x=0, slopes -1 then +1
    const LipschitzPL tent({0.0}, {-1.0, 1.0}, 2.0);
    CHECK(tent(0.0) == 2.0);
    CHECK(tent(-3.0) == 5.0);
    CHECK(tent(4.0) == 6.0);

    const LipschitzPL two({-1.0, 1.0}, {0.0, 1.0, 0.0}, 0.0);
    CHECK(two(-5.0) == 0.0);
    CHECK(two(0.0) == 1.0);
    CHECK(two(1.0) == 2.0);
    CHECK(two(9.0) == 2.0);
}

TEST_CASE("LipschitzPL identity and truncation factories") {
    const LipschitzPL id = LipschitzPL::identity();
    for (double x : {-2.0, 0.0, 0.7, 5.0}) CHECK(id(x) == x);

    const LipschitzPL tr = LipschitzPL::truncation(-1.0, 2.0);
    CHECK(tr(-5.0) == -1.0);
    CHECK(tr(0.5) == 0.5);
    CHECK(tr(7.0) == 2.0);

    const LipschitzPL point = LipschitzPL::truncation(1.5, 1.5);
    CHECK(point(-10.0) == 1.5);
    CHECK(point(10.0) == 1.5);
    CHECK_THROWS_AS(LipschitzPL::truncation(2.0, 1.0), argument_error);
}

TEST_CASE("Lipschitz maps contract increments") {
    SplitMix64 rng(4242);
    for (int i = 0; i < 20; ++i) {
        const LipschitzPL g = gen_lipschitz(rng, -3.0, 3.0);
        for (int j = 0; j < 30; ++j) {
            const double x = rng.uniform(-5.0, 5.0);
            const double y = rng.uniform(-5.0, 5.0);
            CHECK(std::fabs(g(x) - g(y)) <= std::fabs(x - y) + 1e-12);
        }
    }
}

TEST_CASE("rearrange_decreasing sorts, merges and preserves mass") {
    const StepFunction f(Interval(0, 1), {{0.2, 1.0}, {0.3, -2.0}, {0.1, 1.0}, {0.4, 0.5}});
    const StepFunction r = rearrange_decreasing(f);

    // non-increasing values, equal neighbors merged
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        CHECK(r.segments()[i].val > r.segments()[i + 1].val);
    CHECK(mass_profile(f) == mass_profile(r));
    CHECK(r.segments().front().val == 1.0);
    CHECK(r.segments().front().len == doctest::Approx(0.3)); // 0.2 + 0.1 merged
    CHECK(r.domain() == f.domain());

    // idempotent
    CHECK(rearrange_decreasing(r) == r);
}

TEST_CASE("rearrange_decreasing matches the quantile oracle") {
    for (int s = 0; s < 10; ++s) {
        const StepFunction f = gen_random_step(per_sample_seed(505, s), 7, -3.0, 3.0);
        const StepFunction r = rearrange_decreasing(f);
        for (int i = 0; i < 101; ++i) {
            const double t = (i + 0.5) / 102.0;
            CHECK(r.value_at(t) == doctest::Approx(oracles::quantile(f, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("truncate clamps values and keeps the partition") {
    const StepFunction f(Interval(0, 1), {{0.5, 3.0}, {0.5, -2.0}});
    const StepFunction t = truncate(f, -1.0, 1.0);
    CHECK(t.value_at(0.25) == 1.0);
    CHECK(t.value_at(0.75) == -1.0);
    CHECK(t.breakpoints() == f.breakpoints());
    CHECK(truncate(f, 0.0, 0.0).value_at(0.5) == 0.0);
    CHECK_THROWS_AS(truncate(f, 1.0, -1.0), argument_error);
    CHECK_THROWS_AS(truncate(f, 0.0, std::numeric_limits<double>::infinity()),
                    argument_error);
}

TEST_CASE("truncation equals composition with the clamp map") {
    for (int s = 0; s < 8; ++s) {
        const StepFunction f = gen_random_step(per_sample_seed(606, s), 6, -3.0, 3.0);
        const StepFunction a = truncate(f, -1.0, 2.0);
        const StepFunction b = compose_lipschitz(LipschitzPL::truncation(-1.0, 2.0), f);
        CHECK(a == b);
    }
}

TEST_CASE("concatenate glues with the requested mass split") {
    const StepFunction left = StepFunction::constant(1.0, Interval(0, 2));
    const StepFunction right = chi_half();
    const StepFunction glued = concatenate(left, right, 0.3);

    CHECK(glued.domain() == Interval(0.0, 1.0));
    CHECK(glued.value_at(0.1) == 1.0);
    // right part occupies [0.3, 1], internally proportional: jump at 0.65
    CHECK(glued.value_at(0.5) == 1.0);
    CHECK(glued.value_at(0.7) == 0.0);
    double left_mass = 0.0;
    for (const auto& seg : glued.segments())
        if (seg.val == 1.0) left_mass += seg.len;
    CHECK(left_mass == doctest::Approx(0.3 + 0.35).epsilon(1e-12));

    CHECK(concatenate(left, right, 0.0) == right);
    CHECK(concatenate(left, right, 1.0) ==
          StepFunction::constant(1.0, Interval(0, 1)));
    CHECK_THROWS_AS(concatenate(left, right, -0.1), argument_error);
    CHECK_THROWS_AS(concatenate(left, right, 1.1), argument_error);
}

TEST_CASE("compose_lipschitz maps values pointwise") {
    const StepFunction f = chi_half();
    const LipschitzPL tent({0.5}, {1.0, -1.0}, 1.0);
    const StepFunction g = compose_lipschitz(tent, f);
    CHECK(g.value_at(0.25) == tent(1.0));
    CHECK(g.value_at(0.75) == tent(0.0));
    CHECK(g.breakpoints() == f.breakpoints());
}

TEST_CASE("weight/log-density conversions round trip") {
    const StepFunction phi(Interval(0, 1), {{0.5, 1.0}, {0.5, -0.5}});
    const StepFunction w = weight_from_phi(phi);
    CHECK(w.value_at(0.25) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(w.value_at(0.75) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    const StepFunction back = phi_from_weight(w);
    CHECK(back.value_at(0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(back.value_at(0.75) == doctest::Approx(-0.5).epsilon(1e-15));

    const StepFunction bad(Interval(0, 1), {{0.5, 2.0}, {0.5, 0.0}});
    CHECK_THROWS_AS(phi_from_weight(bad), argument_error);
}

TEST_CASE("regularized_weight matches the weight-module factory") {
    const ConvexWeight base = ConvexWeight::exponential();
    const ConvexWeight r = regularized_weight(base, 10);
    for (double t : {-1.0, 0.0, 2.0})
        CHECK(r.eval(t) == doctest::Approx(base.eval(t) + t * t / 10).epsilon(1e-15));
    CHECK(r.descriptor() == "reg:exp:10");
}
