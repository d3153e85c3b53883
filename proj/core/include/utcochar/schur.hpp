#pragma once

#include <utility>
#include <vector>

#include <utcochar/integer.hpp>
#include <utcochar/partitions.hpp>
#include <utcochar/series.hpp>

namespace utcochar
{

// (partition, multiplicity) pairs in graded reverse-lexicographic order.
using MultiplicityEntries = std::vector<std::pair<Partition, Integer>>;

// T^λ ↔ (λ_1,…,λ_d) padded with zeros. Throws std::invalid_argument if λ
// has more than d parts.
ExponentVector exponents_of(const Partition &lambda, std::size_t d);
Partition partition_of(const ExponentVector &dominant);

// The generating function Σ m_λ T^λ of a symmetric function's Schur
// expansion. Its support is restricted to dominant exponent vectors.
//
// degree_bound is the bound the computation was asked for; effective_bound
// (≤ degree_bound) is the degree through which the coefficients are exact.
// Terms above effective_bound are never stored. An effective bound of -1
// means nothing is known.
class MultiplicitySeries
{
public:
    // Throws std::invalid_argument if a term is not dominant or the bounds
    // are inconsistent.
    MultiplicitySeries(TruncatedSeries series, int effective_bound);
    explicit MultiplicitySeries(TruncatedSeries series);

    // M(S_λ) = T^λ.
    static MultiplicitySeries unit(const Partition &lambda, std::size_t d, int degree_bound);

    const TruncatedSeries &series() const noexcept
    {
        return m_series;
    }
    std::size_t var_count() const noexcept
    {
        return m_series.var_count();
    }
    int degree_bound() const noexcept
    {
        return m_series.degree_bound();
    }
    int effective_bound() const noexcept
    {
        return m_effective_bound;
    }

    Integer multiplicity(const Partition &lambda) const;
    MultiplicityEntries entries() const;

    bool operator==(const MultiplicitySeries &) const = default;

private:
    TruncatedSeries m_series;
    int m_effective_bound;
};

// S_λ(t_1,…,t_d) as the sum of t^{content} over semistandard λ-tableaux with
// entries in 1..d. Empty when λ has more than d parts; requires
// weight(λ) ≤ degree_bound so the result is exact.
TruncatedSeries schur_polynomial(const Partition &lambda, std::size_t d, int degree_bound);

// Σ_{σ ∈ S_d} sign(σ) t^{σ(δ)} = ∏_{i<j} (t_i − t_j), δ = (d−1,…,1,0).
TruncatedSeries vandermonde(std::size_t d, int degree_bound);

// Multiplicity series of a symmetric f: multiply by the Vandermonde product,
// keep the strictly decreasing exponents and shift them down by δ. The result
// is exact through degree_bound − d(d−1)/2, recorded as its effective bound.
//
// Symmetry of f is spot-checked on a deterministic sample of terms (adjacent
// transpositions); a failure throws std::invalid_argument.
MultiplicitySeries extract_multiplicities(const TruncatedSeries &f);

// True iff h agrees with M(f) through h's comparable range: checks
// f · ∏_{i<j}(t_i − t_j) = Σ_σ sign(σ) t_σ^δ h(t_σ) on every degree where both
// sides are exact (h through min(effective bound of h, N − d(d−1)/2)).
bool berele_verify(const TruncatedSeries &f, const MultiplicitySeries &h);

// All λ with ≤ max_parts parts such that [λ/μ] is a horizontal strip of
// size m, graded reverse-lexicographic. S_(m) S_μ = Σ S_λ over this list.
std::vector<Partition> pieri_product(const Partition &mu, int m, int max_parts);

// Y: M(g) ↦ M(g · ∏ 1/(1 − t_i)) via the signed monomial substitution
// formula, summed over ε ∈ {0,1}^{d−1}, then multiplied by ∏ 1/(1 − t_i).
// Throws std::logic_error if a non-dominant coefficient survives.
MultiplicitySeries young_derive(const MultiplicitySeries &h);

// Y by the Young rule directly: m_λ = Σ p_μ over μ interlacing under λ
// (λ_1 ≥ μ_1 ≥ λ_2 ≥ …), for every λ with ≤ d parts and weight ≤ degree_bound.
MultiplicityEntries pieri_young_derive_oracle(const MultiplicityEntries &table, int d, int degree_bound);

} // namespace utcochar
