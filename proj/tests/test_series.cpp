#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utcochar/series.hpp>

#include "support/oracles.hpp"

using namespace utcochar;

TEST_CASE("exponent vectors")
{
    ExponentVector e{3, 1, 0};
    CHECK(e.size() == 3);
    CHECK(e.degree() == 4);
    CHECK(e.is_dominant());
    CHECK(e.is_strictly_decreasing());
    CHECK_FALSE(ExponentVector{3, 1, 1}.is_strictly_decreasing());
    CHECK(ExponentVector{3, 1, 0}.hash() == e.hash());
    CHECK_FALSE(ExponentVector{1, 3, 0}.is_dominant());
    CHECK(ExponentVector{2, 1, 0}.is_strictly_decreasing());
    CHECK_THROWS_AS(e.set(0, 256), std::out_of_range);
    CHECK_THROWS_AS(e.set(5, 1), std::out_of_range);
    CHECK(ExponentVector::unit(3, 1) == ExponentVector{0, 1, 0});
}

TEST_CASE("graded lex order: degree first, then lexicographically decreasing")
{
    CHECK(graded_lex_less(ExponentVector{0, 0}, ExponentVector{0, 1}));
    CHECK(graded_lex_less(ExponentVector{1, 0}, ExponentVector{0, 1}));
    CHECK(graded_lex_less(ExponentVector{0, 1}, ExponentVector{2, 0}));
    CHECK_FALSE(graded_lex_less(ExponentVector{1, 1}, ExponentVector{1, 1}));
}

TEST_CASE("truncation drops terms above the bound and zero coefficients")
{
    TruncatedSeries s(2, 3);
    s.add_term(ExponentVector{2, 2}, 5);
    CHECK(s.empty());
    s.add_term(ExponentVector{1, 1}, 2);
    s.add_term(ExponentVector{1, 1}, -2);
    CHECK(s.empty());
    s.add_term(ExponentVector{0, 3}, 7);
    CHECK(s.coefficient(ExponentVector{0, 3}) == 7);
    CHECK(s.truncated(2).empty());
    CHECK_THROWS(s.truncated(4));
    CHECK_THROWS(TruncatedSeries(0, 3));
    CHECK_THROWS(TruncatedSeries(2, 256));
}

TEST_CASE("mismatched ring parameters are rejected")
{
    const TruncatedSeries a = TruncatedSeries::variable(2, 4, 0);
    const TruncatedSeries b = TruncatedSeries::variable(3, 4, 0);
    const TruncatedSeries c = TruncatedSeries::variable(2, 5, 0);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("multiplication agrees with the map-based oracle")
{
    oracle::TableGenerator gen(0x5e71e5);
    for (int round = 0; round < 60; ++round) {
        const auto d = static_cast<std::size_t>(gen.uniform(1, 4));
        const int bound = gen.uniform(0, 9);
        const TruncatedSeries a = gen.series(d, bound, 12);
        const TruncatedSeries b = gen.series(d, bound, 12);
        CHECK(oracle::to_poly(a * b) == oracle::multiply(oracle::to_poly(a), oracle::to_poly(b), bound));
    }
}

TEST_CASE("ring axioms on random series")
{
    oracle::TableGenerator gen(77);
    for (int round = 0; round < 40; ++round) {
        const auto d = static_cast<std::size_t>(gen.uniform(1, 3));
        const int bound = gen.uniform(0, 8);
        const TruncatedSeries a = gen.series(d, bound, 8);
        const TruncatedSeries b = gen.series(d, bound, 8);
        const TruncatedSeries c = gen.series(d, bound, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries(d, bound));
        CHECK(a * TruncatedSeries::constant(d, bound, 1) == a);
    }
}

TEST_CASE("geometric products have binomial coefficients")
{
    const TruncatedSeries g = geometric_product(3, 2, 6);
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; a + b <= 6; ++b) {
            CHECK(g.coefficient(ExponentVector{a, b}) == binomial(a + 2, 2) * binomial(b + 2, 2));
        }
    }
    const std::size_t first[] = {0};
    const TruncatedSeries partial = geometric_product(first, 1, 2, 4);
    CHECK(partial.size() == 5);
    CHECK(partial.coefficient(ExponentVector{0, 1}) == 0);
    CHECK_THROWS(geometric_product(0, 2, 4));
}

TEST_CASE("times_geometric equals multiplication by the geometric series")
{
    oracle::TableGenerator gen(4242);
    for (int round = 0; round < 40; ++round) {
        const auto d = static_cast<std::size_t>(gen.uniform(1, 4));
        const int bound = gen.uniform(0, 9);
        const TruncatedSeries s = gen.series(d, bound, 10);
        CHECK(times_geometric(s) == s * geometric_product(1, d, bound));
    }
}

TEST_CASE("monomial substitution")
{
    // t1 -> t1 t2, t2 -> t2^2 on 1 + t1 + t2 + t1 t2.
    TruncatedSeries s(2, 6);
    for (const auto &e : {ExponentVector{0, 0}, ExponentVector{1, 0}, ExponentVector{0, 1}, ExponentVector{1, 1}}) {
        s.add_term(e, 1);
    }
    const ExponentVector images[] = {{1, 1}, {0, 2}};
    const TruncatedSeries image = substitute_monomials(s, images);
    CHECK(image.size() == 4);
    CHECK(image.coefficient(ExponentVector{1, 3}) == 1);
    CHECK(image.coefficient(ExponentVector{0, 2}) == 1);

    const ExponentVector constant[] = {{0, 0}, {0, 1}};
    CHECK_THROWS_AS(substitute_monomials(s, constant), std::invalid_argument);
    CHECK_THROWS_AS(substitute_monomials(s, constant, DegreeCheck::per_term), std::invalid_argument);

    // t1 -> t1 t2, t2 -> 1 keeps the degree of dominant terms.
    TruncatedSeries dominant(2, 6);
    dominant.add_term(ExponentVector{2, 1}, 3);
    const ExponentVector y_images[] = {{1, 1}, {0, 0}};
    const TruncatedSeries moved = substitute_monomials(dominant, y_images, DegreeCheck::per_term);
    CHECK(moved.coefficient(ExponentVector{2, 2}) == 3);
    TruncatedSeries lowering(2, 6);
    lowering.add_term(ExponentVector{0, 2}, 1);
    CHECK_THROWS_AS(substitute_monomials(lowering, y_images, DegreeCheck::per_term), std::invalid_argument);
}

TEST_CASE("diagonal evaluation and debug dump")
{
    const TruncatedSeries g = geometric_product(1, 2, 3);
    const TruncatedSeries diag = evaluate_diagonal(g);
    for (int n = 0; n <= 3; ++n) {
        CHECK(diag.coefficient(ExponentVector{n}) == n + 1);
    }
    CHECK(dump(TruncatedSeries::variable_sum(2, 2) + TruncatedSeries::constant(2, 2, 4)) == "0 0 : 4\n1 0 : 1\n0 1 : 1\n");
}

TEST_CASE("times_monomial shifts exponents")
{
    const TruncatedSeries s = times_monomial(geometric_product(1, 1, 3), ExponentVector{2}, -2);
    CHECK(s.coefficient(ExponentVector{1}) == 0);
    CHECK(s.coefficient(ExponentVector{2}) == -2);
    CHECK(s.coefficient(ExponentVector{3}) == -2);
    CHECK(s.size() == 2);
}
