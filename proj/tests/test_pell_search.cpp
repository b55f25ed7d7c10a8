#include <doctest.h>

#include <cmath>
#include <map>

#include "dq/pell_search.hpp"

using namespace dq;

namespace {

bool sq(std::uint64_t n)
{
    const std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

// Every c in (b, limit] by direct search.
std::vector<BigInt> brute_extend(std::uint64_t a, std::uint64_t b, std::uint64_t limit)
{
    std::vector<BigInt> out;
    for (std::uint64_t c = b + 1; c <= limit; ++c)
        if (sq(a * c + 1) && sq(b * c + 1))
            out.push_back(BigInt(static_cast<unsigned long>(c)));
    return out;
}

}  // namespace

TEST_CASE("extend_pair examples")
{
    CHECK(extend_pair(1, 3, 2000) == std::vector<BigInt>{8, 120, 1680});
    CHECK(extend_pair(7, 9, 1000000) == std::vector<BigInt>{32, 8160});
    CHECK_THROWS_AS(extend_pair(1, 2, 100), DiophantineError);
    CHECK_THROWS(extend_pair(3, 1, 100));
}

TEST_CASE("extend_pair matches brute force for small pairs")
{
    for (std::uint64_t b = 2; b <= 60; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            if (!sq(a * b + 1))
                continue;
            CHECK_MESSAGE(extend_pair(a, b, 200000) == brute_extend(a, b, 200000), "pair " << a << "," << b);
        }
    }
}

TEST_CASE("Pell recurrence keeps the invariant")
{
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 3}, {7, 9}, {4, 12}, {3, 21}, {1, 1680}}) {
        for (auto [t0, s0] : fundamental_solutions(a, b)) {
            CHECK(t0 * t0 <= BigInt(b) * (b - a));
            for (int sign : {1, -1}) {
                PellState st{a, b, integer_sqrt(BigInt(a) * b + 1).root, sign * t0, s0};
                for (int i = 0; i < 30; ++i) {
                    REQUIRE(st.invariant_holds());
                    if (st.has_integral_c() && st.c() > b)
                        CHECK(is_diophantine(Tuple({BigInt(a), BigInt(b), st.c()})));
                    st.step();
                }
            }
        }
    }
}

TEST_CASE("search_quadruples small ranges")
{
    auto q2ii = search_quadruples(Subcase::Case2ii, 40);
    REQUIRE_FALSE(q2ii.empty());
    CHECK(q2ii.front() == Quadruple{3, 21, 40, 10208, Subcase::Case2ii});

    auto q2iii = search_quadruples(Subcase::Case2iii, 15);
    REQUIRE(q2iii.size() == 2);
    CHECK(q2iii[0] == Quadruple{1, 15, 528, 32760, Subcase::Case2iii});
    CHECK(q2iii[1] == Quadruple{1, 15, 1520, 94248, Subcase::Case2iii});

    for (const auto& q : search_quadruples(Subcase::Case2iii, 200)) {
        CHECK(is_diophantine(Tuple({q.a, q.b, q.c, q.d})));
        CHECK(q.d == d_plus(q.a, q.b, q.c));
        CHECK(classify_quintuple_case(q.a, q.b, q.c, q.d).count(Subcase::Case2iii));
    }
}

TEST_CASE("search is independent of order and threads")
{
    SearchOptions base;
    SearchOptions rev;
    rev.reverse_order = true;
    SearchOptions par;
    par.threads = 3;
    for (auto sc : {Subcase::Case2ii, Subcase::Case2iii}) {
        const auto x = search_quadruples(sc, 300, base);
        CHECK(x == search_quadruples(sc, 300, rev));
        CHECK(x == search_quadruples(sc, 300, par));
    }
}

TEST_CASE("discard policy")
{
    SearchOptions keep;
    keep.discards = DiscardPolicy::Keep;
    const auto kept = search_quadruples(Subcase::Case2ii, 100, keep);
    const auto dropped = search_quadruples(Subcase::Case2ii, 100);
    CHECK(kept.size() >= dropped.size());
    for (const auto& q : dropped) {
        CHECK_FALSE(is_discard(Tuple({q.a, q.b})));
        CHECK_FALSE(is_discard(Tuple({q.a, q.b, q.c})));
    }
}

TEST_CASE("min_second_element for 2(ii) and 2(iii)")
{
    auto m2 = min_second_element(Subcase::Case2ii);
    CHECK(m2.B == 21);
    CHECK(m2.C >= 10208);
    auto m3 = min_second_element(Subcase::Case2iii);
    CHECK(m3.B == 15);
    CHECK(m3.C >= 32760);
    CHECK_THROWS(min_second_element(Subcase::Case2i, 100));
}
