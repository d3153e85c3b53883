#include <utcochar/partitions.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace utcochar
{

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
    while (!m_parts.empty() && m_parts.back() == 0) {
        m_parts.pop_back();
    }
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (m_parts[i] < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
        if (i > 0 && m_parts[i] > m_parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    // Zeros in the middle are impossible once the tail is stripped and the
    // sequence is weakly decreasing.
    m_weight = std::accumulate(m_parts.begin(), m_parts.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::conjugate() const
{
    std::vector<int> columns(m_parts.empty() ? 0 : static_cast<std::size_t>(m_parts.front()), 0);
    for (int row : m_parts) {
        for (int j = 0; j < row; ++j) {
            ++columns[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(columns));
}

Partition Partition::rows(std::size_t first, std::size_t count) const
{
    std::vector<int> out;
    for (std::size_t i = first; i < first + count && i < m_parts.size(); ++i) {
        out.push_back(m_parts[i]);
    }
    return Partition(std::move(out));
}

Partition Partition::rows_from(std::size_t first) const
{
    return rows(first, m_parts.size());
}

std::string Partition::to_string() const
{
    if (m_parts.empty()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(m_parts[i]);
    }
    out += ')';
    return out;
}

bool graded_revlex_less(const Partition &a, const Partition &b)
{
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return b < a;
}

std::vector<Partition> partitions_of(int n, int max_parts)
{
    if (n < 0 || max_parts < 1) {
        throw std::invalid_argument("partitions_of requires n >= 0 and max_parts >= 1");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    // Largest first part first, so the output is lexicographically decreasing.
    std::function<void(int, int)> fill = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) {
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            fill(remaining - part, part);
            current.pop_back();
        }
    };
    fill(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_parts)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto layer = partitions_of(n, max_parts);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

Integer standard_tableaux_count(const Partition &shape)
{
    const Partition columns = shape.conjugate();
    Integer hooks = 1;
    for (std::size_t i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            const int arm = shape[i] - j - 1;
            const int leg = columns[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(shape.weight()) / hooks;
}

Integer weyl_dimension(const Partition &shape, int d)
{
    if (d < 1) {
        throw std::invalid_argument("weyl_dimension requires d >= 1");
    }
    if (static_cast<int>(shape.length()) > d) {
        throw std::invalid_argument("weyl_dimension: partition " + shape.to_string() + " has more than "
                                    + std::to_string(d) + " parts");
    }
    Rational product = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const auto si = static_cast<std::size_t>(i);
            const auto sj = static_cast<std::size_t>(j);
            product *= Rational(shape[si] - shape[sj] + j - i, j - i);
        }
    }
    if (boost::multiprecision::denominator(product) != 1) {
        throw std::logic_error("weyl_dimension: non-integral product");
    }
    return boost::multiprecision::numerator(product);
}

bool contains(const Partition &outer, const Partition &inner)
{
    if (inner.length() > outer.length()) {
        return false;
    }
    for (std::size_t i = 0; i < inner.length(); ++i) {
        if (inner[i] > outer[i]) {
            return false;
        }
    }
    return true;
}

bool horizontal_strip(const Partition &outer, const Partition &inner)
{
    const std::size_t rows = std::max(outer.length(), inner.length());
    for (std::size_t i = 0; i < rows; ++i) {
        if (outer[i] < inner[i] || inner[i] < outer[i + 1]) {
            return false;
        }
    }
    return true;
}

bool dominates(const Partition &lambda, const Partition &mu)
{
    if (lambda.weight() != mu.weight()) {
        return false;
    }
    int lhs = 0;
    int rhs = 0;
    const std::size_t rows = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < rows; ++i) {
        lhs += lambda[i];
        rhs += mu[i];
        if (lhs < rhs) {
            return false;
        }
    }
    return true;
}

} // namespace utcochar
