#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <utcochar/integer.hpp>

namespace utcochar
{

inline constexpr std::size_t max_variables = 16;
inline constexpr int max_exponent = 255;

// Exponents of a monomial t_1^{e_1} ⋯ t_d^{e_d}. Each entry is stored in a
// byte, so every exponent (and every degree bound) is capped at 255.
class ExponentVector
{
public:
    ExponentVector() = default;
    // The zero vector in var_count variables.
    explicit ExponentVector(std::size_t var_count);
    ExponentVector(std::initializer_list<int> exponents);
    static ExponentVector from(std::span<const int> exponents);
    // t_index.
    static ExponentVector unit(std::size_t var_count, std::size_t index);

    std::size_t size() const noexcept
    {
        return m_size;
    }
    int operator[](std::size_t i) const noexcept
    {
        return m_exponents[i];
    }
    // Throws std::out_of_range for an exponent outside [0, 255].
    void set(std::size_t i, int value);
    int degree() const noexcept;

    // e_1 ≥ e_2 ≥ … ≥ e_d.
    bool is_dominant() const noexcept;
    // e_1 > e_2 > … > e_d.
    bool is_strictly_decreasing() const noexcept;

    std::vector<int> to_vector() const;

    bool operator==(const ExponentVector &) const = default;
    std::strong_ordering operator<=>(const ExponentVector &) const = default;

    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, max_variables> m_exponents{};
    std::uint8_t m_size = 0;
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector &e) const noexcept
    {
        return e.hash();
    }
};

// Degree ascending, then lexicographically decreasing (t_1^2 before t_1 t_2
// before t_2^2).
bool graded_lex_less(const ExponentVector &a, const ExponentVector &b);

// A power series in var_count variables known exactly through total degree
// degree_bound. Terms above the bound are dropped on insertion and zero
// coefficients are never stored.
class TruncatedSeries
{
public:
    using term_map = std::unordered_map<ExponentVector, Integer, ExponentVectorHash>;
    using term = std::pair<ExponentVector, Integer>;

    TruncatedSeries(std::size_t var_count, int degree_bound);

    static TruncatedSeries constant(std::size_t var_count, int degree_bound, const Integer &value);
    static TruncatedSeries monomial(int degree_bound, const ExponentVector &exponents, const Integer &coeff = 1);
    // t_index.
    static TruncatedSeries variable(std::size_t var_count, int degree_bound, std::size_t index);
    // t_1 + ⋯ + t_d.
    static TruncatedSeries variable_sum(std::size_t var_count, int degree_bound);

    std::size_t var_count() const noexcept
    {
        return m_var_count;
    }
    int degree_bound() const noexcept
    {
        return m_degree_bound;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool empty() const noexcept
    {
        return m_terms.empty();
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }

    Integer coefficient(const ExponentVector &exponents) const;
    // Accumulates coeff onto the term; silently ignores degrees above the
    // bound and prunes a coefficient that cancels to zero.
    void add_term(const ExponentVector &exponents, const Integer &coeff);

    // Terms in graded-lex order.
    std::vector<term> sorted_terms() const;

    // Same series known only through a smaller bound.
    TruncatedSeries truncated(int degree_bound) const;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    TruncatedSeries &operator*=(const Integer &factor);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        a -= b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        a *= -1;
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Integer &factor)
    {
        a *= factor;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

    // Exact equality of ring parameters and term maps.
    bool operator==(const TruncatedSeries &other) const;

private:
    void require_compatible(const TruncatedSeries &other, const char *op) const;

    std::size_t m_var_count;
    int m_degree_bound;
    term_map m_terms;
};

// ∏_{i ∈ vars} 1/(1 − t_i)^power, truncated. The coefficient of t^a is
// ∏_{i ∈ vars} C(a_i + power − 1, power − 1).
TruncatedSeries geometric_product(std::span<const std::size_t> vars, int power, std::size_t var_count,
                                  int degree_bound);
// Same with every variable.
TruncatedSeries geometric_product(int power, std::size_t var_count, int degree_bound);

// s · ∏_{i ∈ vars} 1/(1 − t_i), computed one variable at a time as a
// running sum along that coordinate. Equal to mul(s, geometric_product(vars, 1)).
TruncatedSeries times_geometric(const TruncatedSeries &s, std::span<const std::size_t> vars);
TruncatedSeries times_geometric(const TruncatedSeries &s);

// s · coeff · t^exponents.
TruncatedSeries times_monomial(const TruncatedSeries &s, const ExponentVector &exponents, const Integer &coeff = 1);

enum class DegreeCheck {
    // Every image monomial must have degree ≥ 1.
    images,
    // Images may be constant, but no term of the input may map to a lower
    // total degree. This is the condition truncation soundness really needs.
    per_term,
};

// Ring map t_i ↦ t^{images[i]}. Throws std::invalid_argument when the
// degree check fails or the image count differs from var_count.
TruncatedSeries substitute_monomials(const TruncatedSeries &s, std::span<const ExponentVector> images,
                                     DegreeCheck check = DegreeCheck::images);

// t_i ↦ t for all i; a univariate series with the same degree bound.
TruncatedSeries evaluate_diagonal(const TruncatedSeries &s);

// Debug dump: one "e1 e2 ... ed : coeff" line per term, graded-lex.
std::string dump(const TruncatedSeries &s);

} // namespace utcochar
