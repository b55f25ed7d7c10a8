#include <doctest.h>

#include <random>

#include "dq/tuple_core.hpp"

using namespace dq;

TEST_CASE("integer_sqrt")
{
    CHECK(integer_sqrt(0).root == 0);
    CHECK(integer_sqrt(0).exact);
    CHECK(integer_sqrt(121).root == 11);
    CHECK(integer_sqrt(121).exact);
    CHECK(integer_sqrt(120).root == 10);
    CHECK_FALSE(integer_sqrt(120).exact);
    CHECK_THROWS_AS(integer_sqrt(-1), std::domain_error);

    // GMP's own mpz_sqrt as the oracle.
    std::mt19937_64 rng(7);
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(11);
    for (int i = 0; i < 2000; ++i) {
        BigInt n = gr.get_z_bits(1 + rng() % 400);
        BigInt want;
        mpz_sqrt(want.get_mpz_t(), n.get_mpz_t());
        auto got = integer_sqrt(n);
        REQUIRE(got.root == want);
        CHECK(got.exact == (want * want == n));
        auto sq = integer_sqrt(n * n);
        CHECK(sq.root == n);
        CHECK(sq.exact);
    }
}

TEST_CASE("parse_bigint")
{
    CHECK(parse_bigint("221e21") == BigInt("221000000000000000000000"));
    CHECK(parse_bigint("2.66e25") == BigInt("26600000000000000000000000"));
    CHECK(parse_bigint("12345") == 12345);
    CHECK_THROWS(parse_bigint("1.5"));
    CHECK_THROWS(parse_bigint("abc"));
}

TEST_CASE("tuple validation")
{
    CHECK_THROWS(Tuple({3, 1}));
    CHECK_THROWS(Tuple({1, 1}));
    CHECK_THROWS(Tuple({0, 1}));
    CHECK_THROWS(Tuple({1}));
    CHECK_THROWS(Tuple({1, 2, 3, 4, 5, 6}));
    CHECK_THROWS(Tuple::from_unsorted({BigInt(3), BigInt(3)}));
    CHECK(Tuple::from_unsorted({BigInt(8), BigInt(1), BigInt(3)}) == Tuple({1, 3, 8}));
}

TEST_CASE("is_diophantine")
{
    CHECK(is_diophantine(Tuple({1, 3, 8, 120})));
    CHECK_FALSE(is_diophantine(Tuple({1, 2})));
    CHECK(is_diophantine(Tuple({3, 21, 40, 10208})));
}

TEST_CASE("d_plus")
{
    CHECK(d_plus(1, 3, 8) == 120);
    CHECK(d_plus(3, 21, 40) == 10208);
    CHECK(d_plus(1, 15, 528) == 32760);
    CHECK(d_plus(1, 15, 1520) == 94248);
    CHECK_THROWS_AS(d_plus(1, 2, 3), DiophantineError);
}

TEST_CASE("is_regular_quadruple")
{
    CHECK(is_regular_quadruple(Tuple({1, 3, 8, 120})));
    CHECK(is_regular_quadruple(Tuple({1, 15, 1520, 94248})));
    // {1, 3, 120, 1680}: d_plus(1, 3, 120) = 1680 directly from the formula.
    const BigInt d = 1 + 3 + 120 + 2 * 1 * 3 * 120 + 2 * 2 * 11 * 19;
    CHECK(d == 1680);
    CHECK(is_regular_quadruple(Tuple({1, 3, 120, 1680})));
    CHECK_FALSE(is_regular_quadruple(Tuple({1, 3, 8, 121})));
}

TEST_CASE("d_plus extends every small triple")
{
    const long lim = 2000;
    std::vector<long> sq;
    auto is_sq = [](long n) {
        long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
        while (r * r > n)
            --r;
        while ((r + 1) * (r + 1) <= n)
            ++r;
        return r * r == n;
    };
    int seen = 0;
    for (long a = 1; a < lim; ++a) {
        for (long b = a + 1; b < lim; ++b) {
            if (!is_sq(a * b + 1))
                continue;
            for (long c = b + 1; c <= lim; ++c) {
                if (!is_sq(a * c + 1) || !is_sq(b * c + 1))
                    continue;
                const BigInt d = d_plus(a, b, c);
                CHECK(d > 4 * BigInt(a) * b * c);
                CHECK(is_diophantine(Tuple({BigInt(a), BigInt(b), BigInt(c), d})));
                ++seen;
            }
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("classify_triple")
{
    CHECK(classify_triple(1, 8, 120).kind == TripleKind::SecondKind);
    CHECK(classify_triple(1, 3, 500).kind == TripleKind::FirstKind);
    CHECK(classify_triple(1, 13, 100).kind == TripleKind::ThirdKind);
    CHECK(classify_triple(1, 3, 8).kind == TripleKind::Unclassified);
    // boundaries: c = b^2 and c = b^5 are second kind, c = b^5 + 1 first kind
    CHECK(classify_triple(1, 8, 64).kind == TripleKind::SecondKind);
    CHECK(classify_triple(1, 8, 32768).kind == TripleKind::SecondKind);
    CHECK(classify_triple(1, 8, 32769).kind == TripleKind::FirstKind);
    CHECK_THROWS(classify_triple(3, 2, 5));
}

TEST_CASE("classify_triple regions are disjoint")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20000; ++i) {
        const long a = 1 + rng() % 50;
        const long b = a + 1 + rng() % 3000;
        const long c = b + 1 + rng() % 20000000;
        const BigInt A(a), B(b), C(c);
        const bool first = C > B * B * B * B * B;
        const bool second = B > 4 * A && B * B <= C && C <= B * B * B * B * B;
        const bool third = B > 12 * A && C * C * C > B * B * B * B * B && C < B * B;
        CHECK(first + second + third <= 1);
        const auto k = classify_triple(A, B, C).kind;
        if (first)
            CHECK(k == TripleKind::FirstKind);
        else if (second)
            CHECK(k == TripleKind::SecondKind);
        else if (third)
            CHECK(k == TripleKind::ThirdKind);
        else
            CHECK(k == TripleKind::Unclassified);
    }
}

TEST_CASE("classify_quintuple_case")
{
    CHECK(classify_quintuple_case(1, 1680, 23408, BigInt(157351935)) == std::set<Subcase>{Subcase::Case2i});
    CHECK(classify_quintuple_case(3, 21, 40, 10208).count(Subcase::Case2ii));
    CHECK(classify_quintuple_case(1, 15, 528, 32760).count(Subcase::Case2iii));
    CHECK_THROWS_AS(classify_quintuple_case(1, 3, 8, 121), DiophantineError);
}

TEST_CASE("subcase labels")
{
    CHECK(parse_subcase("2i") == Subcase::Case2i);
    CHECK(parse_subcase("2(iii)") == Subcase::Case2iii);
    CHECK(parse_subcase("2IV") == Subcase::Case2iv);
    CHECK(parse_subcase("3") == Subcase::Case3);
    CHECK_THROWS(parse_subcase("2v"));
    for (auto s : {Subcase::Case1, Subcase::Case2i, Subcase::Case2ii, Subcase::Case2iii, Subcase::Case2iv,
                   Subcase::Case3})
        CHECK(parse_subcase(to_string(s)) == s);
}

TEST_CASE("is_discard examples")
{
    auto d = is_discard(Tuple({3, 5}));
    REQUIRE(d);
    CHECK(d->id == DiscardFamilyId::TwinPair);
    CHECK(d->k == 3);
    REQUIRE(is_discard(Tuple({1, 8, 15})));
    CHECK(is_discard(Tuple({1, 8, 15}))->id == DiscardFamilyId::KedlayaTriple);
    REQUIRE(is_discard(Tuple({2, 12, 24})));
    CHECK(is_discard(Tuple({2, 12, 24}))->id == DiscardFamilyId::KedlayaTriple);
    CHECK_FALSE(is_discard(Tuple({1, 1680})));
    CHECK_FALSE(is_discard(Tuple({1, 1680, 23408})));
}

TEST_CASE("toggle family proven range")
{
    CHECK(toggle_parameter_proven(1));
    CHECK(toggle_parameter_proven(10));
    CHECK_FALSE(toggle_parameter_proven(11));
    CHECK_FALSE(toggle_parameter_proven(52329));
    CHECK(toggle_parameter_proven(52330));
    // {k, A^2 k + 2A, (A+1)^2 k + 2(A+1)} with k = 7, A = 20 is not catalogued
    const Tuple t({7, 400 * 7 + 40, 441 * 7 + 42});
    CHECK(is_diophantine(t));
    auto d = is_discard(t);
    CHECK((!d || d->id != DiscardFamilyId::HeTogbeToggle));
    CHECK_THROWS(instantiate_discard(DiscardFamilyId::HeTogbeToggle, 7, 20));
}

TEST_CASE("every family member is Diophantine and recognised")
{
    const DiscardFamilyId ids[] = {
        DiscardFamilyId::TwinPair,        DiscardFamilyId::HeTogbePeriodic,  DiscardFamilyId::SquareMinusOnePair,
        DiscardFamilyId::TwoSquarePair,   DiscardFamilyId::FourKMinusFour,   DiscardFamilyId::ThreeSquareMinus,
        DiscardFamilyId::ThreeSquarePlus, DiscardFamilyId::FourKPlusFour,
    };
    for (auto id : ids) {
        for (long k = 2; k <= 1000; ++k) {
            const Tuple t = instantiate_discard(id, k);
            REQUIRE(is_diophantine(t));
            CHECK(is_discard(t));
        }
    }
    for (long k = 1; k <= 5; ++k) {
        const Tuple t = instantiate_discard(DiscardFamilyId::KedlayaTriple, k);
        CHECK(is_diophantine(t));
        CHECK(is_discard(t));
    }
    for (long k = 1; k <= 30; ++k) {
        const Tuple t = instantiate_discard(DiscardFamilyId::FibonacciTriple, k);
        CHECK(is_diophantine(t));
        CHECK(is_discard(t));
    }
    for (long A : {1L, 5L, 10L, 52330L, 60000L}) {
        for (long k = 1; k <= 200; ++k) {
            const Tuple t = instantiate_discard(DiscardFamilyId::HeTogbeToggle, k, A);
            CHECK(is_diophantine(t));
            CHECK(is_discard(t));
        }
    }
}
