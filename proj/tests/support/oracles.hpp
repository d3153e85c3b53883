#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except for the plain data types, so agreement is independent evidence.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <utcochar/integer.hpp>
#include <utcochar/partitions.hpp>
#include <utcochar/series.hpp>

namespace oracle
{

using utcochar::Integer;
using Poly = std::map<std::vector<int>, Integer>;

inline void add(Poly &p, const std::vector<int> &e, const Integer &c)
{
    Integer &slot = p[e];
    slot += c;
    if (slot == 0) {
        p.erase(e);
    }
}

inline Poly multiply(const Poly &a, const Poly &b, int degree_bound)
{
    Poly out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            std::vector<int> e(ea.size());
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                deg += e[i];
            }
            if (deg <= degree_bound) {
                add(out, e, ca * cb);
            }
        }
    }
    return out;
}

inline Poly to_poly(const utcochar::TruncatedSeries &s)
{
    Poly out;
    for (const auto &[e, c] : s.terms()) {
        add(out, e.to_vector(), c);
    }
    return out;
}

inline std::vector<int> padded(const utcochar::Partition &p, std::size_t d)
{
    std::vector<int> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = p[i];
    }
    return out;
}

// Standard tableaux by removing a corner box: d_λ = Σ d_{λ − corner}.
inline Integer syt_count(std::vector<int> shape)
{
    while (!shape.empty() && shape.back() == 0) {
        shape.pop_back();
    }
    if (shape.empty()) {
        return 1;
    }
    Integer total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const int next = i + 1 < shape.size() ? shape[i + 1] : 0;
        if (shape[i] > next) {
            --shape[i];
            total += syt_count(shape);
            ++shape[i];
        }
    }
    return total;
}

// Calls visit(content) for every semistandard filling of shape with entries
// in 1..d, where content[i] counts the entries equal to i + 1.
inline void for_each_ssyt(const utcochar::Partition &shape, std::size_t d,
                          const std::function<void(const std::vector<int> &)> &visit)
{
    std::vector<std::vector<int>> grid;
    for (std::size_t r = 0; r < shape.length(); ++r) {
        grid.emplace_back(static_cast<std::size_t>(shape[r]), 0);
    }
    std::vector<int> content(d, 0);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == grid.size()) {
            visit(content);
            return;
        }
        if (c == grid[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int low = 1;
        if (c > 0) {
            low = std::max(low, grid[r][c - 1]);
        }
        if (r > 0) {
            low = std::max(low, grid[r - 1][c] + 1);
        }
        for (int v = low; v <= static_cast<int>(d); ++v) {
            grid[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            fill(r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0, 0);
}

inline Integer ssyt_count(const utcochar::Partition &shape, std::size_t d)
{
    Integer count = 0;
    for_each_ssyt(shape, d, [&](const std::vector<int> &) { ++count; });
    return count;
}

inline Poly schur(const utcochar::Partition &shape, std::size_t d)
{
    Poly out;
    for_each_ssyt(shape, d, [&](const std::vector<int> &content) { add(out, content, 1); });
    return out;
}

// a_α = Σ_σ sign(σ) t^{σ(α)}.
inline Poly alternant(const std::vector<int> &alpha)
{
    const std::size_t d = alpha.size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    Poly out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        std::vector<int> e(d);
        for (std::size_t i = 0; i < d; ++i) {
            e[perm[i]] = alpha[i];
        }
        add(out, e, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::vector<int> staircase(std::size_t d)
{
    std::vector<int> delta(d);
    for (std::size_t i = 0; i < d; ++i) {
        delta[i] = static_cast<int>(d - 1 - i);
    }
    return delta;
}

// Every λ with ≤ d parts and weight ≤ max_weight, by direct enumeration of
// weakly decreasing tuples.
inline std::vector<std::vector<int>> dominant_tuples(std::size_t d, int max_weight)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int cap, int left) {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(cap, left); ++v) {
            cur[i] = v;
            rec(i + 1, v, left - v);
        }
    };
    rec(0, max_weight, max_weight);
    return out;
}

// Interlacing λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ … ≥ λ_d ≥ μ_d.
inline bool interlaces(const std::vector<int> &lambda, const std::vector<int> &mu)
{
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < mu[i]) {
            return false;
        }
        if (i + 1 < lambda.size() && mu[i] < lambda[i + 1]) {
            return false;
        }
    }
    return true;
}

// Y on a table {μ: m_μ}: Σ_μ m_μ Σ_{λ interlacing μ} T^λ.
inline Poly young_derive(const Poly &table, std::size_t d, int degree_bound)
{
    Poly out;
    const auto candidates = dominant_tuples(d, degree_bound);
    for (const auto &[mu, m] : table) {
        for (const auto &lambda : candidates) {
            if (interlaces(lambda, mu)) {
                add(out, lambda, m);
            }
        }
    }
    return out;
}

// Multiplicities of a symmetric polynomial by peeling off the leading
// dominant monomial with Schur polynomials from tableau enumeration. f must
// be symmetric in each total degree.
inline Poly peel_schur(Poly f, std::size_t d)
{
    Poly out;
    while (!f.empty()) {
        auto lead = std::max_element(f.begin(), f.end(), [](const auto &a, const auto &b) {
            const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
            const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
            return da != db ? da > db : a.first < b.first;
        });
        const std::vector<int> e = lead->first;
        const Integer c = lead->second;
        if (!std::is_sorted(e.rbegin(), e.rend())) {
            return {};
        }
        add(out, e, c);
        for (const auto &[se, sc] : schur(utcochar::Partition(e), d)) {
            add(f, se, -c * sc);
        }
    }
    return out;
}

// Random multiplicity tables supported on partitions with ≤ d parts.
class TableGenerator
{
public:
    explicit TableGenerator(std::uint32_t seed) : m_rng(seed) {}

    Poly table(std::size_t d, int max_weight, int max_terms)
    {
        const auto candidates = dominant_tuples(d, max_weight);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<int> count(1, max_terms);
        Poly out;
        for (int i = count(m_rng); i > 0; --i) {
            add(out, candidates[pick(m_rng)], coeff(m_rng));
        }
        return out;
    }

    int uniform(int low, int high)
    {
        return std::uniform_int_distribution<int>(low, high)(m_rng);
    }

    // Sparse series with exponents of total degree ≤ degree_bound.
    utcochar::TruncatedSeries series(std::size_t d, int degree_bound, int max_terms)
    {
        utcochar::TruncatedSeries out(d, degree_bound);
        for (int i = uniform(0, max_terms); i > 0; --i) {
            utcochar::ExponentVector e(d);
            int left = uniform(0, degree_bound);
            for (std::size_t j = 0; j < d && left > 0; ++j) {
                const int v = uniform(0, left);
                e.set(j, v);
                left -= v;
            }
            out.add_term(e, uniform(-5, 5));
        }
        return out;
    }

private:
    std::mt19937 m_rng;
};

} // namespace oracle
