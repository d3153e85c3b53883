#include <utcochar/closedform.hpp>

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace utcochar
{

namespace
{

// Halves appear in n_λ and c_λ; the products are always even.
Integer exact_half(const Integer &value)
{
    if (value % 2 != 0) {
        throw std::logic_error("closed form: expected an even product");
    }
    return value / 2;
}

Integer m_U2_difference(const Partition &lambda)
{
    // (λ_1, λ_2) with λ_2 > 0, or (λ_1, λ_2, 1).
    if (lambda.length() == 2 || (lambda.length() == 3 && lambda[2] == 1)) {
        return lambda[0] - lambda[1] + 1;
    }
    return 0;
}

Integer m_U3_difference(const Partition &lambda)
{
    const std::size_t parts = lambda.length();
    const int l1 = lambda[0];
    const int l2 = lambda[1];
    if (parts == 4 && lambda[3] == 2) {
        return n_lambda(lambda);
    }
    if (parts == 5 && lambda[3] == 1 && lambda[4] == 1) {
        return n_lambda(lambda);
    }
    if ((parts == 4 && lambda[3] == 1) || parts == 3) {
        return 4 * n_lambda(lambda) - c_lambda(lambda);
    }
    if (parts == 2 && l2 >= 2) {
        return exact_half(Integer(l1) * (l1 - l2 + 1) * (l2 - 1));
    }
    return 0;
}

using Poly = std::vector<std::pair<std::vector<int>, int>>;

TruncatedSeries polynomial(std::size_t var_count, int degree_bound, const Poly &terms)
{
    TruncatedSeries out(var_count, degree_bound);
    for (const auto &[exponents, coeff] : terms) {
        out.add_term(ExponentVector::from(exponents), coeff);
    }
    return out;
}

TruncatedSeries univariate(int degree_bound, std::initializer_list<int> coefficients)
{
    TruncatedSeries out(1, degree_bound);
    int power = 0;
    for (int c : coefficients) {
        out.add_term(ExponentVector{power++}, c);
    }
    return out;
}

// 1 / ((1 − t)^a (1 − t^2)^b) in one variable.
TruncatedSeries univariate_denominator(int a, int b, int degree_bound)
{
    TruncatedSeries out = TruncatedSeries::constant(1, degree_bound, 1);
    if (a > 0) {
        out = out * geometric_product(a, 1, degree_bound);
    }
    if (b > 0) {
        const ExponentVector square{2};
        out = out * substitute_monomials(geometric_product(b, 1, degree_bound), std::span(&square, 1));
    }
    return out;
}

} // namespace

Integer m_U1_closed(const Partition &lambda)
{
    return lambda.length() <= 1 ? 1 : 0;
}

Integer m_U2_closed(const Partition &lambda)
{
    return m_U1_closed(lambda) + m_U2_difference(lambda);
}

Integer m_U3_closed(const Partition &lambda)
{
    return m_U2_closed(lambda) + m_U3_difference(lambda);
}

Integer n_lambda(const Partition &lambda)
{
    const int l1 = lambda[0];
    const int l2 = lambda[1];
    const int l3 = lambda[2];
    return exact_half(Integer(l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2));
}

Integer c_lambda(const Partition &lambda)
{
    const int l1 = lambda[0];
    const int l2 = lambda[1];
    if (lambda.length() == 4 && lambda[2] == 1 && lambda[3] == 1) {
        return exact_half(Integer(l1 + 2) * (l1 - l2 + 1) * (l2 + 1));
    }
    if (lambda.length() == 3 && lambda[2] == 1) {
        // Matches the coefficient of v_1^{λ_1−λ_2} v_2^{λ_2−1} v_3 in
        // m_U3_difference_v_closed. The variant ½(λ_1+3)(λ_1−λ_2+1)(λ_2+2)
        // would make m_(2,1,1)(U_3) negative.
        return exact_half(Integer(l1 - l2 + 1) * ((l1 + 3) * (l2 + 2) - 4));
    }
    return 0;
}

int tail_weight(const Partition &lambda, int k)
{
    int total = 0;
    for (std::size_t i = static_cast<std::size_t>(k); i < lambda.length(); ++i) {
        total += lambda[i];
    }
    return total;
}

Integer m_maximal_closed(const Partition &lambda, int k)
{
    if (k < 1) {
        throw std::invalid_argument("m_maximal_closed requires k >= 1");
    }
    if (tail_weight(lambda, k) != k - 1) {
        throw std::invalid_argument("m_maximal_closed: tail of " + lambda.to_string() + " does not have weight "
                                    + std::to_string(k - 1));
    }
    const auto rows = static_cast<std::size_t>(k);
    return standard_tableaux_count(lambda.rows_from(rows)) * weyl_dimension(lambda.rows(0, rows), k);
}

bool support_predicate(const Partition &lambda, int k)
{
    return static_cast<int>(lambda.length()) <= 2 * k - 1 && tail_weight(lambda, k) <= k - 1;
}

TruncatedSeries colength_closed(int k, int degree_bound)
{
    if (k < 1 || k > 4) {
        throw std::out_of_range("colength_closed: no closed form for k = " + std::to_string(k));
    }
    // cl(U_1) = 1/(1 − t).
    TruncatedSeries total = univariate_denominator(1, 0, degree_bound);
    if (k >= 2) {
        total += univariate(degree_bound, {0, 0, 1}) * univariate_denominator(3, 0, degree_bound);
    }
    if (k >= 3) {
        total += univariate(degree_bound, {0, 0, 0, 0, 3, 6, 4, -2, -1}) * univariate_denominator(3, 3, degree_bound);
    }
    if (k >= 4) {
        total += univariate(degree_bound, {0, 0, 0, 0, 0, 0, 11, 45, 63, -1, -42, -24, 16, 12, -3, -1})
                 * univariate_denominator(4, 6, degree_bound);
    }
    return total;
}

TruncatedSeries m_U2_difference_v_closed(int degree_bound)
{
    constexpr std::size_t vars = 3;
    const TruncatedSeries numerator = polynomial(vars, degree_bound, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    const std::size_t v1[] = {0};
    const std::size_t v2[] = {1};
    return numerator * geometric_product(v1, 2, vars, degree_bound) * geometric_product(v2, 1, vars, degree_bound);
}

TruncatedSeries m_U3_difference_v_closed(int degree_bound)
{
    constexpr std::size_t vars = 5;
    const int n = degree_bound;
    const std::size_t v1[] = {0};
    const std::size_t v2[] = {1};
    const std::size_t v3[] = {2};

    // ((v_5 + v_4^2 + 4v_4 + 4v_3)/(1 − v_3) + v_2^2)(1 − v_1 v_2)
    const TruncatedSeries inner = polynomial(vars, n,
                                             {{{0, 0, 0, 0, 1}, 1},
                                              {{0, 0, 0, 2, 0}, 1},
                                              {{0, 0, 0, 1, 0}, 4},
                                              {{0, 0, 1, 0, 0}, 4}})
                                  * geometric_product(v3, 1, vars, n);
    const TruncatedSeries first = (inner + polynomial(vars, n, {{{0, 2, 0, 0, 0}, 1}}))
                                  * polynomial(vars, n, {{{0, 0, 0, 0, 0}, 1}, {{1, 1, 0, 0, 0}, -1}});

    // (v_2^2 − v_1 − 3v_2 + 3) v_4 + (v_1 v_2^2 − v_1 v_2 + v_2^2 − v_1 − 4v_2 + 4) v_3
    const TruncatedSeries second = polynomial(vars, n,
                                              {{{0, 2, 0, 1, 0}, 1},
                                               {{1, 0, 0, 1, 0}, -1},
                                               {{0, 1, 0, 1, 0}, -3},
                                               {{0, 0, 0, 1, 0}, 3},
                                               {{1, 2, 1, 0, 0}, 1},
                                               {{1, 1, 1, 0, 0}, -1},
                                               {{0, 2, 1, 0, 0}, 1},
                                               {{1, 0, 1, 0, 0}, -1},
                                               {{0, 1, 1, 0, 0}, -4},
                                               {{0, 0, 1, 0, 0}, 4}});

    return (first - second) * geometric_product(v1, 3, vars, n) * geometric_product(v2, 3, vars, n);
}

} // namespace utcochar
