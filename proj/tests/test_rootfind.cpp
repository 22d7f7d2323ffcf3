#include <doctest.h>

#include <cmath>
#include <cstring>

#include "splinequad/errors.hpp"
#include "splinequad/families.hpp"
#include "splinequad/rootfind.hpp"

using namespace splinequad;

namespace {

GegenbauerCombo<double> combo(GegenbauerOrder order, std::initializer_list<std::pair<int, double>> terms)
{
    GegenbauerCombo<double> p(order);
    for (const auto& [degree, coefficient] : terms) p.add(degree, coefficient);
    return p;
}

const auto k32 = GegenbauerOrders::three_halves();
const auto k52 = GegenbauerOrders::five_halves();

} // namespace

TEST_CASE("isolate_and_refine examples")
{
    const auto one = isolate_and_refine(combo(k32, {{1, 1.0}}), -1.0, 1.0, 1);
    REQUIRE(one.roots.size() == 1);
    CHECK(std::abs(one.roots[0]) <= 1e-15);

    const auto two = isolate_and_refine(combo(k32, {{2, 4.0}, {0, -9.0}}), -1.0, 1.0, 2);
    REQUIRE(two.roots.size() == 2);
    CHECK(two.roots[0] == doctest::Approx(-0.7071067811865476).epsilon(1e-15));
    CHECK(two.roots[1] == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(two.lo == -1.0);
    CHECK(two.hi == 1.0);

    const auto spec = build_c1_interior<double>(2, DeltaSign::Minus);
    CHECK_THROWS_AS(isolate_and_refine(spec.intervals[0].R, -1.0, 1.0, 2), CountMismatch);
}

TEST_CASE("CountMismatch reports expected and found counts")
{
    try {
        isolate_and_refine(combo(k32, {{1, 1.0}}), -1.0, 1.0, 3);
        FAIL("expected CountMismatch");
    } catch (const CountMismatch& e) {
        CHECK(e.expected() == 3);
        CHECK(e.found() == 1);
    }
}

TEST_CASE("refine_root examples")
{
    const double root = refine_root(combo(k32, {{1, 1.0}, {0, std::sqrt(3.0)}}), -1.0, 0.0);
    CHECK(root == doctest::Approx(-0.5773502691896258).epsilon(1e-15));

    const double r7 = refine_root(combo(k52, {{2, 1.0}}), 0.0, 1.0);
    CHECK(r7 == doctest::Approx(0.3779644730092272).epsilon(1e-15));

    // p = x, written as C_1^(3/2) / 3
    CHECK_THROWS_AS(refine_root(combo(k32, {{1, 1.0 / 3.0}}), 0.5, 1.0), NoSignChange);
}

TEST_CASE("root counts, ordering and polish for every family up to n = 50")
{
    for (const auto& id : kAllFamilies) {
        for (int n = min_index(id); n <= 50; ++n) {
            const auto spec = build_family<double>(id, n);
            for (const auto& iv : spec.intervals) {
                if (iv.expected_free_nodes == 0) continue;
                INFO(id.name() << " n=" << n);
                const auto set = isolate_and_refine(iv.R, -1.0, 1.0, iv.expected_free_nodes);
                REQUIRE(static_cast<int>(set.roots.size()) == iv.expected_free_nodes);
                REQUIRE(set.residuals.size() == set.roots.size());
                for (std::size_t i = 0; i < set.roots.size(); ++i) {
                    if (i > 0) CHECK(set.roots[i] > set.roots[i - 1]);
                    CHECK(set.roots[i] >= -1.0 - 1e-12);
                    CHECK(set.roots[i] <= 1.0 + 1e-12);
                    const auto v = eval_combo(iv.R, set.roots[i]);
                    CHECK(std::abs(v.value) == set.residuals[i]);
                    CHECK(set.residuals[i] <= 1e-10 * std::max(1.0, std::abs(v.derivative)));
                }
            }
        }
    }
}

TEST_CASE("root finding is deterministic")
{
    const auto spec = build_c1_interior<double>(17);
    const auto a = isolate_and_refine(spec.intervals[0].R, -1.0, 1.0, 17);
    const auto b = isolate_and_refine(spec.intervals[0].R, -1.0, 1.0, 17);
    REQUIRE(a.roots.size() == b.roots.size());
    CHECK(std::memcmp(a.roots.data(), b.roots.data(), a.roots.size() * sizeof(double)) == 0);
}

TEST_CASE("negative delta pushes roots out of [-1, 1] for the interior C1 rule")
{
    for (int n = 2; n <= 10; ++n) {
        const auto spec = build_c1_interior<double>(n, DeltaSign::Minus);
        CHECK_THROWS_AS(isolate_and_refine(spec.intervals[0].R, -1.0, 1.0, n), CountMismatch);
    }
}

TEST_CASE("extended-precision roots agree with double roots")
{
    const auto spec_d = build_c1_even<double>(9);
    const auto spec_x = build_c1_even<Extended>(9);
    const auto rd = isolate_and_refine(spec_d.intervals[0].R, -1.0, 1.0, 8);
    const auto rx = isolate_and_refine(spec_x.intervals[0].R, Extended(-1), Extended(1), 8);
    REQUIRE(rd.roots.size() == rx.roots.size());
    for (std::size_t i = 0; i < rd.roots.size(); ++i) {
        CHECK(std::abs(rd.roots[i] - static_cast<double>(rx.roots[i])) <= 1e-15);
        CHECK(static_cast<double>(rx.residuals[i]) <= 1e-40);
    }
}

TEST_CASE("a root exactly at the interval end is reported once")
{
    const auto set = isolate_and_refine(combo(k32, {{1, 1.0}}), 0.0, 1.0, 1);
    REQUIRE(set.roots.size() == 1);
    CHECK(set.roots[0] == 0.0);
}
