#include <utcochar/series.hpp>

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace utcochar
{

namespace
{

void check_var_count(std::size_t var_count)
{
    if (var_count < 1 || var_count > max_variables) {
        throw std::invalid_argument("variable count must be in [1, " + std::to_string(max_variables) + "], got "
                                    + std::to_string(var_count));
    }
}

std::uint64_t mix(std::uint64_t x) noexcept
{
    // splitmix64 finalizer.
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

} // namespace

ExponentVector::ExponentVector(std::size_t var_count)
{
    check_var_count(var_count);
    m_size = static_cast<std::uint8_t>(var_count);
}

ExponentVector::ExponentVector(std::initializer_list<int> exponents)
    : ExponentVector(from(std::span<const int>(exponents.begin(), exponents.size())))
{
}

ExponentVector ExponentVector::from(std::span<const int> exponents)
{
    ExponentVector out(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        out.set(i, exponents[i]);
    }
    return out;
}

ExponentVector ExponentVector::unit(std::size_t var_count, std::size_t index)
{
    ExponentVector out(var_count);
    out.set(index, 1);
    return out;
}

void ExponentVector::set(std::size_t i, int value)
{
    if (i >= m_size) {
        throw std::out_of_range("exponent index out of range");
    }
    if (value < 0 || value > max_exponent) {
        throw std::out_of_range("exponent " + std::to_string(value) + " outside [0, 255]");
    }
    m_exponents[i] = static_cast<std::uint8_t>(value);
}

int ExponentVector::degree() const noexcept
{
    int total = 0;
    for (std::size_t i = 0; i < m_size; ++i) {
        total += m_exponents[i];
    }
    return total;
}

bool ExponentVector::is_dominant() const noexcept
{
    for (std::size_t i = 1; i < m_size; ++i) {
        if (m_exponents[i] > m_exponents[i - 1]) {
            return false;
        }
    }
    return true;
}

bool ExponentVector::is_strictly_decreasing() const noexcept
{
    for (std::size_t i = 1; i < m_size; ++i) {
        if (m_exponents[i] >= m_exponents[i - 1]) {
            return false;
        }
    }
    return true;
}

std::vector<int> ExponentVector::to_vector() const
{
    return std::vector<int>(m_exponents.begin(), m_exponents.begin() + m_size);
}

std::size_t ExponentVector::hash() const noexcept
{
    static_assert(max_variables == 16);
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, m_exponents.data(), 8);
    std::memcpy(&hi, m_exponents.data() + 8, 8);
    return static_cast<std::size_t>(mix(lo ^ mix(hi + m_size)));
}

bool graded_lex_less(const ExponentVector &a, const ExponentVector &b)
{
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) {
        return da < db;
    }
    return b < a;
}

TruncatedSeries::TruncatedSeries(std::size_t var_count, int degree_bound)
    : m_var_count(var_count), m_degree_bound(degree_bound)
{
    check_var_count(var_count);
    if (degree_bound < -1 || degree_bound > max_exponent) {
        throw std::invalid_argument("degree bound must be in [-1, 255], got " + std::to_string(degree_bound));
    }
}

TruncatedSeries TruncatedSeries::constant(std::size_t var_count, int degree_bound, const Integer &value)
{
    TruncatedSeries out(var_count, degree_bound);
    out.add_term(ExponentVector(var_count), value);
    return out;
}

TruncatedSeries TruncatedSeries::monomial(int degree_bound, const ExponentVector &exponents, const Integer &coeff)
{
    TruncatedSeries out(exponents.size(), degree_bound);
    out.add_term(exponents, coeff);
    return out;
}

TruncatedSeries TruncatedSeries::variable(std::size_t var_count, int degree_bound, std::size_t index)
{
    return monomial(degree_bound, ExponentVector::unit(var_count, index));
}

TruncatedSeries TruncatedSeries::variable_sum(std::size_t var_count, int degree_bound)
{
    TruncatedSeries out(var_count, degree_bound);
    for (std::size_t i = 0; i < var_count; ++i) {
        out.add_term(ExponentVector::unit(var_count, i), 1);
    }
    return out;
}

Integer TruncatedSeries::coefficient(const ExponentVector &exponents) const
{
    const auto it = m_terms.find(exponents);
    return it == m_terms.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(const ExponentVector &exponents, const Integer &coeff)
{
    if (exponents.size() != m_var_count) {
        throw std::invalid_argument("exponent vector length does not match the variable count");
    }
    if (coeff == 0 || exponents.degree() > m_degree_bound) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

std::vector<TruncatedSeries::term> TruncatedSeries::sorted_terms() const
{
    std::vector<term> out(m_terms.begin(), m_terms.end());
    std::sort(out.begin(), out.end(),
              [](const term &a, const term &b) { return graded_lex_less(a.first, b.first); });
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int degree_bound) const
{
    if (degree_bound > m_degree_bound) {
        throw std::invalid_argument("cannot raise the degree bound of a truncated series");
    }
    TruncatedSeries out(m_var_count, degree_bound);
    for (const auto &[e, c] : m_terms) {
        out.add_term(e, c);
    }
    return out;
}

void TruncatedSeries::require_compatible(const TruncatedSeries &other, const char *op) const
{
    if (m_var_count != other.m_var_count || m_degree_bound != other.m_degree_bound) {
        throw std::invalid_argument(std::string(op) + ": mismatched series (variables " + std::to_string(m_var_count)
                                    + " vs " + std::to_string(other.m_var_count) + ", degree bound "
                                    + std::to_string(m_degree_bound) + " vs "
                                    + std::to_string(other.m_degree_bound) + ")");
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    require_compatible(other, "add");
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    require_compatible(other, "subtract");
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Integer &factor)
{
    if (factor == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, c] : m_terms) {
        c *= factor;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.require_compatible(b, "mul");
    const int bound = a.degree_bound();
    TruncatedSeries out(a.var_count(), bound);
    if (bound < 0) {
        return out;
    }

    // Bucket the right factor by degree so pairs over the bound are never formed.
    std::vector<std::vector<const TruncatedSeries::term_map::value_type *>> by_degree(
        static_cast<std::size_t>(bound) + 1);
    for (const auto &entry : b.terms()) {
        by_degree[static_cast<std::size_t>(entry.first.degree())].push_back(&entry);
    }

    const std::size_t n = a.var_count();
    ExponentVector product(n);
    for (const auto &[ea, ca] : a.terms()) {
        const int da = ea.degree();
        for (int db = 0; db + da <= bound; ++db) {
            for (const auto *entry : by_degree[static_cast<std::size_t>(db)]) {
                const ExponentVector &eb = entry->first;
                for (std::size_t i = 0; i < n; ++i) {
                    product.set(i, ea[i] + eb[i]);
                }
                out.add_term(product, ca * entry->second);
            }
        }
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries &other) const
{
    return m_var_count == other.m_var_count && m_degree_bound == other.m_degree_bound && m_terms == other.m_terms;
}

TruncatedSeries geometric_product(std::span<const std::size_t> vars, int power, std::size_t var_count,
                                  int degree_bound)
{
    if (power < 1) {
        throw std::invalid_argument("geometric_product requires power >= 1");
    }
    for (std::size_t v : vars) {
        if (v >= var_count) {
            throw std::invalid_argument("geometric_product: variable index out of range");
        }
    }
    TruncatedSeries out(var_count, degree_bound);
    if (degree_bound < 0) {
        return out;
    }
    // Enumerate exponent vectors supported on `vars` with total degree ≤ bound.
    ExponentVector e(var_count);
    auto fill = [&](auto &&self, std::size_t pos, int remaining, Integer coeff) -> void {
        if (pos == vars.size()) {
            out.add_term(e, coeff);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            e.set(vars[pos], a);
            self(self, pos + 1, remaining - a, coeff * binomial(a + power - 1, power - 1));
        }
        e.set(vars[pos], 0);
    };
    fill(fill, 0, degree_bound, Integer(1));
    return out;
}

TruncatedSeries geometric_product(int power, std::size_t var_count, int degree_bound)
{
    std::vector<std::size_t> vars(var_count);
    for (std::size_t i = 0; i < var_count; ++i) {
        vars[i] = i;
    }
    return geometric_product(vars, power, var_count, degree_bound);
}

TruncatedSeries times_geometric(const TruncatedSeries &s, std::span<const std::size_t> vars)
{
    TruncatedSeries current = s;
    const int bound = s.degree_bound();
    for (std::size_t v : vars) {
        if (v >= s.var_count()) {
            throw std::invalid_argument("times_geometric: variable index out of range");
        }
        TruncatedSeries next(s.var_count(), bound);
        for (const auto &[e, c] : current.terms()) {
            ExponentVector shifted = e;
            const int slack = bound - e.degree();
            for (int a = 0; a <= slack; ++a) {
                shifted.set(v, e[v] + a);
                next.add_term(shifted, c);
            }
        }
        current = std::move(next);
    }
    return current;
}

TruncatedSeries times_geometric(const TruncatedSeries &s)
{
    std::vector<std::size_t> vars(s.var_count());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        vars[i] = i;
    }
    return times_geometric(s, vars);
}

TruncatedSeries times_monomial(const TruncatedSeries &s, const ExponentVector &exponents, const Integer &coeff)
{
    if (exponents.size() != s.var_count()) {
        throw std::invalid_argument("times_monomial: exponent vector length does not match the variable count");
    }
    TruncatedSeries out(s.var_count(), s.degree_bound());
    if (coeff == 0) {
        return out;
    }
    const int shift = exponents.degree();
    ExponentVector product(s.var_count());
    for (const auto &[e, c] : s.terms()) {
        if (e.degree() + shift > s.degree_bound()) {
            continue;
        }
        for (std::size_t i = 0; i < s.var_count(); ++i) {
            product.set(i, e[i] + exponents[i]);
        }
        out.add_term(product, c * coeff);
    }
    return out;
}

TruncatedSeries substitute_monomials(const TruncatedSeries &s, std::span<const ExponentVector> images,
                                     DegreeCheck check)
{
    const std::size_t n = s.var_count();
    if (images.size() != n) {
        throw std::invalid_argument("substitute_monomials: expected one image per variable");
    }
    for (const auto &image : images) {
        if (image.size() != n) {
            throw std::invalid_argument("substitute_monomials: image length does not match the variable count");
        }
        if (check == DegreeCheck::images && image.degree() == 0) {
            throw std::invalid_argument("substitute_monomials: constant image would break truncation");
        }
    }

    TruncatedSeries out(n, s.degree_bound());
    std::vector<int> exponents(n);
    for (const auto &[e, c] : s.terms()) {
        std::fill(exponents.begin(), exponents.end(), 0);
        int degree = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                exponents[j] += e[i] * images[i][j];
            }
            degree += e[i] * images[i].degree();
        }
        if (check == DegreeCheck::per_term && degree < e.degree()) {
            throw std::invalid_argument("substitute_monomials: a term would lose degree");
        }
        if (degree > s.degree_bound()) {
            continue;
        }
        out.add_term(ExponentVector::from(exponents), c);
    }
    return out;
}

TruncatedSeries evaluate_diagonal(const TruncatedSeries &s)
{
    TruncatedSeries out(1, s.degree_bound());
    for (const auto &[e, c] : s.terms()) {
        out.add_term(ExponentVector{e.degree()}, c);
    }
    return out;
}

std::string dump(const TruncatedSeries &s)
{
    std::ostringstream out;
    for (const auto &[e, c] : s.sorted_terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << e[i];
        }
        out << " : " << c << '\n';
    }
    return out.str();
}

} // namespace utcochar
