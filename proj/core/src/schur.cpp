#include <utcochar/schur.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace utcochar
{

namespace
{

int staircase_degree(std::size_t d)
{
    return static_cast<int>(d * (d - 1) / 2);
}

// Permutations of 0..d-1 with their signs, in lexicographic order.
std::vector<std::pair<std::vector<std::size_t>, int>> signed_permutations(std::size_t d)
{
    std::vector<std::pair<std::vector<std::size_t>, int>> out;
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        out.emplace_back(perm, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void check_symmetry_sample(const TruncatedSeries &f)
{
    const std::size_t d = f.var_count();
    if (d < 2 || f.empty()) {
        return;
    }
    const auto terms = f.sorted_terms();
    constexpr std::size_t sample_size = 64;
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    const std::size_t rounds = std::min(sample_size, terms.size());
    for (std::size_t r = 0; r < rounds; ++r) {
        const auto &[e, c] = terms[terms.size() <= sample_size ? r : pick(rng)];
        for (std::size_t i = 0; i + 1 < d; ++i) {
            ExponentVector swapped = e;
            swapped.set(i, e[i + 1]);
            swapped.set(i + 1, e[i]);
            if (f.coefficient(swapped) != c) {
                throw std::invalid_argument("extract_multiplicities: input is not symmetric");
            }
        }
    }
}

} // namespace

ExponentVector exponents_of(const Partition &lambda, std::size_t d)
{
    if (lambda.length() > d) {
        throw std::invalid_argument("partition " + lambda.to_string() + " has more than " + std::to_string(d)
                                    + " parts");
    }
    ExponentVector out(d);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        out.set(i, lambda[i]);
    }
    return out;
}

Partition partition_of(const ExponentVector &dominant)
{
    return Partition(dominant.to_vector());
}

MultiplicitySeries::MultiplicitySeries(TruncatedSeries series, int effective_bound)
    : m_series(series.var_count(), series.degree_bound()), m_effective_bound(effective_bound)
{
    if (effective_bound > series.degree_bound() || effective_bound < -1) {
        throw std::invalid_argument("effective bound must lie in [-1, degree bound]");
    }
    for (const auto &[e, c] : series.terms()) {
        if (!e.is_dominant()) {
            throw std::invalid_argument("multiplicity series term is not dominant");
        }
        if (e.degree() <= effective_bound) {
            m_series.add_term(e, c);
        }
    }
}

MultiplicitySeries::MultiplicitySeries(TruncatedSeries series)
    : MultiplicitySeries(series, series.degree_bound())
{
}

MultiplicitySeries MultiplicitySeries::unit(const Partition &lambda, std::size_t d, int degree_bound)
{
    return MultiplicitySeries(TruncatedSeries::monomial(degree_bound, exponents_of(lambda, d)), degree_bound);
}

Integer MultiplicitySeries::multiplicity(const Partition &lambda) const
{
    if (lambda.length() > var_count()) {
        return 0;
    }
    return m_series.coefficient(exponents_of(lambda, var_count()));
}

MultiplicityEntries MultiplicitySeries::entries() const
{
    MultiplicityEntries out;
    out.reserve(m_series.size());
    for (auto &[e, c] : m_series.sorted_terms()) {
        out.emplace_back(partition_of(e), std::move(c));
    }
    return out;
}

TruncatedSeries schur_polynomial(const Partition &lambda, std::size_t d, int degree_bound)
{
    if (lambda.weight() > degree_bound) {
        throw std::invalid_argument("schur_polynomial: weight exceeds the degree bound");
    }
    TruncatedSeries out(d, degree_bound);
    if (lambda.length() > d) {
        return out;
    }

    // Fill the diagram row by row; rows stay weakly increasing, columns
    // strictly increasing.
    std::vector<std::vector<int>> tableau(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        tableau[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    }
    std::vector<int> content(d, 0);
    const Partition columns = lambda.conjugate();
    const int max_entry = static_cast<int>(d);

    auto fill = [&](auto &&self, std::size_t row, std::size_t col) -> void {
        if (row == lambda.length()) {
            out.add_term(ExponentVector::from(content), 1);
            return;
        }
        if (col == tableau[row].size()) {
            self(self, row + 1, 0);
            return;
        }
        int low = 1;
        if (col > 0) {
            low = std::max(low, tableau[row][col - 1]);
        }
        if (row > 0) {
            low = std::max(low, tableau[row - 1][col] + 1);
        }
        // Entries in row r are at least r + 1 and leave room for the rows below.
        const int rows_below = columns[col] - static_cast<int>(row) - 1;
        const int high = max_entry - rows_below;
        for (int v = low; v <= high; ++v) {
            tableau[row][col] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, row, col + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0, 0);
    return out;
}

TruncatedSeries vandermonde(std::size_t d, int degree_bound)
{
    TruncatedSeries out(d, degree_bound);
    for (const auto &[perm, sign] : signed_permutations(d)) {
        ExponentVector e(d);
        for (std::size_t i = 0; i < d; ++i) {
            e.set(perm[i], static_cast<int>(d - 1 - i));
        }
        out.add_term(e, sign);
    }
    return out;
}

MultiplicitySeries extract_multiplicities(const TruncatedSeries &f)
{
    check_symmetry_sample(f);
    const std::size_t d = f.var_count();
    const int bound = f.degree_bound();
    const int effective = std::max(-1, bound - staircase_degree(d));

    const TruncatedSeries alternant = f * vandermonde(d, bound);
    TruncatedSeries shifted(d, bound);
    ExponentVector lowered(d);
    for (const auto &[e, c] : alternant.terms()) {
        if (!e.is_strictly_decreasing()) {
            continue;
        }
        for (std::size_t i = 0; i < d; ++i) {
            lowered.set(i, e[i] - static_cast<int>(d - 1 - i));
        }
        shifted.add_term(lowered, c);
    }
    return MultiplicitySeries(std::move(shifted), effective);
}

bool berele_verify(const TruncatedSeries &f, const MultiplicitySeries &h)
{
    const std::size_t d = f.var_count();
    if (h.var_count() != d) {
        throw std::invalid_argument("berele_verify: variable counts differ");
    }
    const int staircase = staircase_degree(d);
    const int range = std::min(h.effective_bound(), f.degree_bound() - staircase);
    if (range < 0) {
        return true;
    }
    const int bound = range + staircase;

    const TruncatedSeries lhs = f.truncated(bound) * vandermonde(d, bound);

    TruncatedSeries rhs(d, bound);
    const auto perms = signed_permutations(d);
    ExponentVector placed(d);
    for (const auto &[q, c] : h.series().terms()) {
        if (q.degree() > range) {
            continue;
        }
        for (const auto &[perm, sign] : perms) {
            for (std::size_t i = 0; i < d; ++i) {
                placed.set(perm[i], q[i] + static_cast<int>(d - 1 - i));
            }
            rhs.add_term(placed, sign * c);
        }
    }
    return lhs == rhs;
}

std::vector<Partition> pieri_product(const Partition &mu, int m, int max_parts)
{
    if (m < 0 || max_parts < 1) {
        throw std::invalid_argument("pieri_product requires m >= 0 and max_parts >= 1");
    }
    std::vector<Partition> out;
    if (static_cast<int>(mu.length()) > max_parts) {
        return out;
    }
    // A horizontal strip adds at most one new row.
    const std::size_t rows = std::min<std::size_t>(mu.length() + 1, static_cast<std::size_t>(max_parts));
    std::vector<int> lambda(rows, 0);
    auto fill = [&](auto &&self, std::size_t row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) {
                out.emplace_back(lambda);
            }
            return;
        }
        const int low = mu[row];
        const int high = row == 0 ? mu[0] + remaining : std::min(mu[row - 1], mu[row] + remaining);
        for (int v = high; v >= low; --v) {
            lambda[row] = v;
            self(self, row + 1, remaining - (v - low));
        }
    };
    fill(fill, 0, m);
    std::sort(out.begin(), out.end(), graded_revlex_less);
    return out;
}

MultiplicitySeries young_derive(const MultiplicitySeries &h)
{
    const std::size_t d = h.var_count();
    const int bound = h.degree_bound();
    TruncatedSeries sum(d, bound);

    std::vector<ExponentVector> images(d, ExponentVector(d));
    const std::size_t branches = std::size_t{1} << (d - 1);
    for (std::size_t mask = 0; mask < branches; ++mask) {
        // eps[i] for i = 1..d-1 (0-based), eps[0] = 0.
        auto eps = [&](std::size_t i) -> int { return i == 0 || i >= d ? 0 : static_cast<int>((mask >> (i - 1)) & 1u); };
        ExponentVector prefactor(d);
        int flips = 0;
        for (std::size_t i = 0; i < d; ++i) {
            ExponentVector image(d);
            image.set(i, 1 - eps(i));
            if (i + 1 < d) {
                image.set(i + 1, eps(i + 1));
            }
            images[i] = image;
            prefactor.set(i, eps(i));
            flips += eps(i);
        }
        const TruncatedSeries substituted = substitute_monomials(h.series(), images, DegreeCheck::per_term);
        sum += times_monomial(substituted, prefactor, flips % 2 == 0 ? 1 : -1);
    }

    TruncatedSeries result = times_geometric(sum);
    for (const auto &[e, c] : result.terms()) {
        if (!e.is_dominant()) {
            throw std::logic_error("young_derive: non-dominant term survived");
        }
    }
    return MultiplicitySeries(std::move(result), h.effective_bound());
}

MultiplicityEntries pieri_young_derive_oracle(const MultiplicityEntries &table, int d, int degree_bound)
{
    std::map<Partition, Integer> acc;
    for (const auto &[mu, p] : table) {
        if (static_cast<int>(mu.length()) > d) {
            continue;
        }
        for (int m = 0; mu.weight() + m <= degree_bound; ++m) {
            for (auto &lambda : pieri_product(mu, m, d)) {
                acc[std::move(lambda)] += p;
            }
        }
    }
    MultiplicityEntries out;
    for (auto &[lambda, c] : acc) {
        if (c != 0) {
            out.emplace_back(lambda, c);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return graded_revlex_less(a.first, b.first); });
    return out;
}

} // namespace utcochar
