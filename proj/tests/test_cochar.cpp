#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utcochar/cochar.hpp>

#include "support/oracles.hpp"

using namespace utcochar;

namespace
{

// Σ_j C(k,j) G^j (Σt − 1)^{j−1} by plain polynomial arithmetic on maps.
oracle::Poly hilbert_oracle(int k, std::size_t d, int bound)
{
    oracle::Poly g;
    for (const auto &e : oracle::dominant_tuples(d, bound)) {
        std::vector<int> perm = e;
        std::sort(perm.begin(), perm.end());
        do {
            g[perm] = 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    oracle::Poly s_minus_1;
    oracle::add(s_minus_1, std::vector<int>(d, 0), -1);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<int> e(d, 0);
        e[i] = 1;
        oracle::add(s_minus_1, e, 1);
    }
    oracle::Poly total;
    oracle::Poly g_power = g;
    oracle::Poly s_power;
    oracle::add(s_power, std::vector<int>(d, 0), 1);
    for (int j = 1; j <= k; ++j) {
        for (const auto &[e, c] : oracle::multiply(g_power, s_power, bound)) {
            oracle::add(total, e, c * binomial(k, j));
        }
        g_power = oracle::multiply(g_power, g, bound);
        s_power = oracle::multiply(s_power, s_minus_1, bound);
    }
    return total;
}

} // namespace

TEST_CASE("Hilbert series of F_d(U_k) against direct expansion")
{
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
            CHECK(oracle::to_poly(hilbert_series_Uk(k, d, 6)) == hilbert_oracle(k, d, 6));
        }
    }
    // U_2 in two variables: t1 t2 appears with coefficient 2.
    CHECK(hilbert_series_Uk(2, 2, 4).coefficient(ExponentVector{1, 1}) == 2);
    // U_1 is commutative: one monomial of each multidegree.
    const TruncatedSeries h1 = hilbert_series_Uk(1, 1, 3);
    CHECK(dump(h1) == "0 : 1\n1 : 1\n2 : 1\n3 : 1\n");
}

TEST_CASE("closed forms of the Hilbert series agree")
{
    for (int k = 1; k <= 4; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
            CHECK(hilbert_series_binomial(k, d, 8) == hilbert_series_telescoped(k, d, 8));
            if (k <= 3) {
                CHECK(hilbert_series_binomial(k, d, 7) == hilbert_series_proper_oracle(k, d, 7));
            }
        }
    }
}

TEST_CASE("recurrence between consecutive U_k")
{
    for (int k = 2; k <= 4; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
            CHECK(formanek_recurrence_check(k, d, 8));
        }
    }
}

TEST_CASE("hook sum identity")
{
    for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
        TruncatedSeries rhs = times_geometric(TruncatedSeries::variable_sum(d, 9) - TruncatedSeries::constant(d, 9, 1));
        rhs += TruncatedSeries::constant(d, 9, 1);
        CHECK(hook_sum(d, 9) == rhs);
    }
    // Y(t1) = Σ t1^n − 1 + Σ_{n≥2} t1^{n−1} t2 in two variables.
    const MultiplicitySeries y = young_derive(MultiplicitySeries::unit(Partition{1}, 2, 6));
    CHECK(y.multiplicity(Partition{}) == 0);
    CHECK(y.multiplicity(Partition{4}) == 1);
    CHECK(y.multiplicity(Partition{3, 1}) == 1);
    CHECK(y.multiplicity(Partition{2, 2}) == 0);
}

TEST_CASE("multiplicity series of U_k: frozen values")
{
    const MultiplicitySeries u3 = multiplicity_series_Uk(3, 5, 9);
    CHECK(u3.multiplicity(Partition{2, 2}) == 2);
    CHECK(u3.multiplicity(Partition{2, 1, 1}) == 3);
    CHECK(u3.multiplicity(Partition{1, 1, 1, 1, 1}) == 1);
    CHECK(u3.multiplicity(Partition{1, 1, 1, 1, 1, 1}) == 0);
    const MultiplicitySeries u2 = multiplicity_series_Uk(2, 3, 6);
    CHECK(u2.multiplicity(Partition{3, 1}) == 3);
    CHECK(u2.effective_bound() == 6);
}

TEST_CASE("multiplicities agree with Schur peeling of the Hilbert series")
{
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
            const int bound = 6;
            const oracle::Poly peeled = oracle::peel_schur(oracle::to_poly(hilbert_series_Uk(k, d, bound)), d);
            CHECK(oracle::to_poly(multiplicity_series_Uk(k, d, bound).series()) == peeled);
        }
    }
}

TEST_CASE("Berele identity for the computed pairs")
{
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t d = 1; d <= 4; ++d) {
            const int bound = 9;
            const int range = bound - static_cast<int>(d * (d - 1) / 2);
            CHECK(berele_verify(hilbert_series_Uk(k, d, bound), multiplicity_series_Uk(k, d, range)));
        }
    }
}

TEST_CASE("restricting variables only drops partitions with too many parts")
{
    for (int k = 2; k <= 3; ++k) {
        const MultiplicitySeries wide = multiplicity_series_Uk(k, complete_variable_count(k) + 1, 8);
        for (std::size_t d = 1; d <= complete_variable_count(k); ++d) {
            const MultiplicitySeries narrow = multiplicity_series_Uk(k, d, 8);
            for (const auto &lambda : partitions_up_to(8, static_cast<int>(d))) {
                CHECK(narrow.multiplicity(lambda) == wide.multiplicity(lambda));
            }
        }
    }
}

TEST_CASE("tables, v-variables and colength")
{
    const MultiplicitySeries u2 = multiplicity_series_Uk(2, 3, 5);
    const MultiplicityTable table = to_table(2, u2);
    CHECK(table.complete());
    CHECK(table.entries == u2.entries());
    CHECK(!to_table(2, multiplicity_series_Uk(2, 2, 5)).complete());

    const TruncatedSeries v = to_v_variables(u2);
    CHECK(v.coefficient(ExponentVector{2, 0, 1}) == u2.multiplicity(Partition{3, 1, 1}));
    CHECK(from_v_variables(v, 5) == u2);

    const TruncatedSeries cl2 = colength_series(2, 6);
    CHECK(cl2.coefficient(ExponentVector{2}) == 2);
    CHECK(cl2.coefficient(ExponentVector{4}) == 7);
    const TruncatedSeries cl1 = colength_series(1, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(cl1.coefficient(ExponentVector{n}) == 1);
    }
}

TEST_CASE("argument validation")
{
    CHECK_THROWS(multiplicity_series_Uk(0, 2, 4));
    CHECK_THROWS(hilbert_series_Uk(0, 2, 4));
    CHECK_THROWS(formanek_recurrence_check(1, 2, 4));
}
