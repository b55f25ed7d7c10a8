#include <doctest.h>

#include <cmath>

#include "dq/bound_engine.hpp"
#include "dq/census.hpp"
#include "dq/explicit_bounds.hpp"

using namespace dq;

namespace {

Real field(const std::vector<std::pair<std::string, Real>>& v, const std::string& key)
{
    for (const auto& [k, x] : v)
        if (k == key)
            return x;
    FAIL("missing field " << key);
    return 0;
}

}  // namespace

TEST_CASE("round_up_sig")
{
    CHECK(round_up_sig(5.8669e25L, 2) == doctest::Approx(5.9e25L));
    CHECK(round_up_sig(3.8705e27L, 3) == doctest::Approx(3.88e27L));
    CHECK(round_up_sig(1.2L, 2) == doctest::Approx(1.2L));
    CHECK(round_up_sig(1.21L, 2) == doctest::Approx(1.3L));
    CHECK(round_up_sig(0.0123L, 1) == doctest::Approx(0.02L));
    CHECK(round_up_sig(-3, 2) == -3);
}

TEST_CASE("case 2i")
{
    const auto l = census_2i(PrintedInputs::d_2i);
    CHECK(l.case_id == "2i");
    CHECK(field(l.inputs, "r_max") == doctest::Approx(2.24e17).epsilon(0.005));
    CHECK(field(l.inputs, "r_max") < 2.24e17L);
    CHECK(field(l.inputs, "pairs") <= 2.43e20L);
    CHECK(field(l.inputs, "pairs") == doctest::Approx(2.4244e20).epsilon(1e-4));
    CHECK(field(l.inputs, "b_max") < 4.49e34L);
    CHECK(field(l.alternates, "omega_max") == 24);
    CHECK(field(l.factors, "2^(omega+2)") == std::ldexp(1.0L, 26));
    CHECK(l.result == doctest::Approx(1.8035e26).epsilon(1e-4));
    CHECK(field(l.alternates, "pair_count_reading") == doctest::Approx(1.9524e29).epsilon(1e-4));
    REQUIRE(l.published);
    CHECK(*l.published == 1.81e29L);
    CHECK(l.flags.size() == 2);
    CHECK_THROWS_AS(census_2i(0), std::domain_error);
}

TEST_CASE("case 2ii")
{
    const auto l = census_2ii(PrintedInputs::d_2ii);
    CHECK(field(l.inputs, "r_max") == doctest::Approx(2.6e23).epsilon(0.01));
    CHECK(l.result == doctest::Approx(2.0e27).epsilon(0.01));
    CHECK(l.result == doctest::Approx(1.9888e27).epsilon(1e-4));
    const auto one = census_2ii(PrintedInputs::d_2ii, 1);
    const auto three = census_2ii(PrintedInputs::d_2ii, 3);
    CHECK(three.result == doctest::Approx(3 * one.result));
    CHECK(one.result == doctest::Approx(bound_value(BoundId::Lem14, field(one.inputs, "r_max"))));
    CHECK_THROWS(census_2ii(PrintedInputs::d_2ii, 0));
}

TEST_CASE("case 2iii at the printed eta")
{
    const auto s = census_2iii(PrintedInputs::d_2iii, PrintedInputs::eta);
    CHECK(s.N3a == doctest::Approx(7.9239e18).epsilon(1e-4));
    CHECK(s.N3b == doctest::Approx(1.011e15).epsilon(1e-3));
    CHECK(s.omega_max == 18);
    CHECK(s.branch_a == doctest::Approx(1.9926e25).epsilon(1e-4));
    CHECK(s.branch_b == doctest::Approx(1.9934e25).epsilon(1e-4));
    CHECK(s.value() <= 1.994e25L);
    CHECK(std::fabs(s.branch_a / s.branch_b - 1) < 0.01L);
    CHECK_THROWS(census_2iii(PrintedInputs::d_2iii, 0.5L));
}

TEST_CASE("branches are monotone in eta and cross once")
{
    int sign_changes = 0;
    Real prev_a = INFINITY, prev_b = 0;
    int prev_sign = 0;
    for (Real L = std::log(1e5L); L <= std::log(1e20L); L += 0.05L) {
        const auto s = census_2iii(PrintedInputs::d_2iii, std::exp(L));
        CHECK(s.branch_a < prev_a);
        CHECK(s.branch_b >= prev_b);
        prev_a = s.branch_a;
        prev_b = s.branch_b;
        const int sign = s.branch_a > s.branch_b ? 1 : -1;
        if (prev_sign && sign != prev_sign)
            ++sign_changes;
        prev_sign = sign;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("optimize_eta")
{
    const auto s = optimize_eta(PrintedInputs::d_2iii);
    CHECK(s.eta == doctest::Approx(1.29e11).epsilon(0.01));
    CHECK(s.value() <= 1.994e25L * (1 + 1e-4L));
    CHECK(std::fabs(s.branch_a / s.branch_b - 1) < 1e-3L);
    for (Real f : {0.5L, 0.9L, 1.1L, 2.0L})
        CHECK(census_2iii(PrintedInputs::d_2iii, s.eta * f).value() >= s.value() * (1 - 1e-4L));
    CHECK_THROWS_AS(optimize_eta(PrintedInputs::d_2iii, 1e15L, 1e20L), std::runtime_error);
}

TEST_CASE("tail lines")
{
    const auto [iv, third] = census_tail();
    CHECK(iv.result == doctest::Approx(3.8705e27).epsilon(1e-4));
    CHECK(third.result == doctest::Approx(5.8669e25).epsilon(1e-4));
    CHECK(round_up_sig(iv.result, 3) == doctest::Approx(3.88e27));
    CHECK(round_up_sig(third.result, 2) == doctest::Approx(5.9e25));
    CHECK(iv.result == doctest::Approx(4 * bound_value(BoundId::BourbonLinear, 2.66e25L)));
    CHECK_THROWS_AS(census_tail(0.5L, 10), std::domain_error);
}

TEST_CASE("lines are monotone in their d bound")
{
    Real p1 = 0, p2 = 0, p3 = 0;
    for (Real f : {0.1L, 0.5L, 1.0L, 2.0L, 10.0L}) {
        const Real r1 = census_2i(PrintedInputs::d_2i * f).result;
        const Real r2 = census_2ii(PrintedInputs::d_2ii * f).result;
        const Real r3 = census_2iii_line(PrintedInputs::d_2iii * f, PrintedInputs::eta).result;
        CHECK(r1 >= p1);
        CHECK(r2 >= p2);
        CHECK(r3 >= p3);
        p1 = r1;
        p2 = r2;
        p3 = r3;
    }
}

TEST_CASE("total")
{
    const auto t = total_bound(census_from_printed());
    CHECK(t.lines.size() == 5);
    CHECK(t.published_lines_total == doctest::Approx(1.8696e29).epsilon(1e-4));
    CHECK(t.published_lines_total <= t.table_total);
    CHECK(t.theorem_total == 2.32e29L);
    CHECK(t.table_total == 1.9e29L);
    CHECK(t.computed_total < t.computed_total_pairs);
    CHECK(t.flags.size() >= 3);
    CHECK(t.flags.front().find("<=") != std::string::npos);
}

TEST_CASE("engine-fed census stays within 5% of the printed inputs")
{
    const Real d1 = iterate_d_bound(kind_params(Subcase::Case2i)).d_bound;
    const Real d2 = iterate_d_bound(kind_params(Subcase::Case2ii)).d_bound;
    const Real d3 = iterate_d_bound(kind_params(Subcase::Case2iii)).d_bound;
    const auto engine = census_from_bounds(d1, d2, d3);
    const auto paper = census_from_printed();
    REQUIRE(engine.size() == paper.size());
    for (std::size_t i = 0; i < engine.size(); ++i) {
        INFO(engine[i].case_id);
        CHECK(std::fabs(engine[i].result / paper[i].result - 1) < 0.05L);
    }
}

TEST_CASE("D(-1) bound")
{
    const auto c = default_dminus1_config();
    const Real v = dminus1_bound(c.N, c.multiplier);
    CHECK(v == doctest::Approx(3.01e60).epsilon(1e-3));
    CHECK(dminus1_bound(c.N, 2 * c.multiplier) == doctest::Approx(2 * v));
    CHECK(dminus1_bound(10, 1) == doctest::Approx(134.9).epsilon(1e-3));
    CHECK_THROWS(dminus1_bound(c.N, 0));
    CHECK_THROWS_AS(dminus1_bound(1, 1), std::domain_error);
}
