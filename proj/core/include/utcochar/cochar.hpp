#pragma once

#include <cstddef>

#include <utcochar/integer.hpp>
#include <utcochar/partitions.hpp>
#include <utcochar/schur.hpp>
#include <utcochar/series.hpp>

namespace utcochar
{

// Hilbert series H(F_d(U_k)) of the relatively free algebra of the variety
// generated by k×k upper triangular matrices. Computed as
// Σ_{j=1}^k C(k,j) G^j (t_1+⋯+t_d − 1)^{j−1}, G = ∏ 1/(1 − t_i), and checked
// against ((1 + (Σt − 1) G)^k − 1) / (Σt − 1); throws std::logic_error if the
// two disagree.
TruncatedSeries hilbert_series_Uk(int k, std::size_t d, int degree_bound);

// The two closed forms separately.
TruncatedSeries hilbert_series_binomial(int k, std::size_t d, int degree_bound);
TruncatedSeries hilbert_series_telescoped(int k, std::size_t d, int degree_bound);

// Σ_{n≥2} S_(n−1,1)(t_1,…,t_d): the Hilbert series of the commutator ideal
// of the free metabelian Lie algebra.
TruncatedSeries hook_sum(std::size_t d, int degree_bound);

// Independent route through proper polynomials:
// G · Σ_{r=0}^{k−1} (Σ_{p≥2} S_(p−1,1))^r with Schur polynomials from tableaux.
TruncatedSeries hilbert_series_proper_oracle(int k, std::size_t d, int degree_bound);

// H(U_k) = H(U_1) + H(U_{k−1}) + (Σt − 1) H(U_1) H(U_{k−1}), term by term.
bool formanek_recurrence_check(int k, std::size_t d, int degree_bound);

// d_λ Y^j(T^λ) assembled over j ≤ k, λ ⊢ q < j with signs
// (−1)^{j−q−1} C(k,j) C(j−1,q). Complete for every partition when
// d ≥ 2k − 1; for smaller d the result covers partitions with ≤ d parts.
// Throws std::logic_error on a negative coefficient.
MultiplicitySeries multiplicity_series_Uk(int k, std::size_t d, int degree_bound);

// d = 2k − 1 always suffices.
inline std::size_t complete_variable_count(int k)
{
    return static_cast<std::size_t>(2 * k - 1);
}

struct MultiplicityTable {
    int k = 0;
    std::size_t d = 0;
    int degree_bound = 0;
    int effective_bound = 0;
    MultiplicityEntries entries;

    // True when d is large enough that no partition is cut off.
    bool complete() const noexcept
    {
        return d >= complete_variable_count(k);
    }
};

MultiplicityTable to_table(int k, const MultiplicitySeries &series);

// M ↦ M' with v_i = t_1⋯t_i: (λ_1,…,λ_d) ↦ (λ_1−λ_2, …, λ_{d−1}−λ_d, λ_d).
// The v-series keeps the same degree bound, since λ_1 ≤ |λ|.
TruncatedSeries to_v_variables(const MultiplicitySeries &series);
// Inverse of to_v_variables for a series in v-variables; terms whose
// partition weight exceeds degree_bound are dropped.
MultiplicitySeries from_v_variables(const TruncatedSeries &v_series, int degree_bound);

// cl_n(U_k) for n ≤ degree_bound: the diagonal of M(U_k; T_{2k−1}).
TruncatedSeries colength_series(int k, int degree_bound);

} // namespace utcochar
