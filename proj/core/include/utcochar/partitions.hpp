#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <utcochar/integer.hpp>

namespace utcochar
{

// A weakly decreasing tuple of positive parts. Trailing zeros are never
// stored; indexing past the last part yields 0, so (3,1) and (3,1,0,0)
// are the same value.
class Partition
{
public:
    Partition() = default;
    // Accepts trailing zeros and strips them. Throws std::invalid_argument
    // on negative entries or an increase.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const noexcept
    {
        return m_parts;
    }
    std::size_t length() const noexcept
    {
        return m_parts.size();
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }
    int weight() const noexcept
    {
        return m_weight;
    }
    int operator[](std::size_t i) const noexcept
    {
        return i < m_parts.size() ? m_parts[i] : 0;
    }

    Partition conjugate() const;
    // Rows [first, first + count), e.g. the tail (λ_{k+1}, …) past row k.
    Partition rows(std::size_t first, std::size_t count) const;
    // Rows from `first` to the end.
    Partition rows_from(std::size_t first) const;

    std::string to_string() const;

    bool operator==(const Partition &) const = default;
    // Plain lexicographic order on the stored parts; see graded_revlex_less
    // for the output order.
    std::strong_ordering operator<=>(const Partition &other) const
    {
        return m_parts <=> other.m_parts;
    }

private:
    std::vector<int> m_parts;
    int m_weight = 0;
};

// Weight ascending, then lexicographically decreasing: (3),(2,1),(1,1,1).
bool graded_revlex_less(const Partition &a, const Partition &b);

// All partitions of n with at most max_parts parts, lexicographically
// decreasing.
std::vector<Partition> partitions_of(int n, int max_parts);

// Partitions of every weight 0..max_weight, graded reverse-lexicographic.
std::vector<Partition> partitions_up_to(int max_weight, int max_parts);

// Number of standard Young tableaux (hook-length formula).
Integer standard_tableaux_count(const Partition &shape);

// dim W_d(λ) = S_λ(1,…,1) by the Weyl product formula. Throws
// std::invalid_argument if λ has more than d parts.
Integer weyl_dimension(const Partition &shape, int d);

// [μ] ⊆ [λ].
bool contains(const Partition &outer, const Partition &inner);

// [λ/μ] is a horizontal strip: λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …
bool horizontal_strip(const Partition &outer, const Partition &inner);

// Dominance order on partitions of equal weight: λ ⊵ μ.
bool dominates(const Partition &lambda, const Partition &mu);

} // namespace utcochar
