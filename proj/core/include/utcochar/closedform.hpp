#pragma once

#include <string>

#include <utcochar/integer.hpp>
#include <utcochar/partitions.hpp>
#include <utcochar/series.hpp>

namespace utcochar
{

// One oracle comparison: what was checked, the expected (closed-form) value
// and the value the engine computed.
struct ClosedFormReport {
    std::string check;
    std::string subject;
    Integer expected;
    Integer computed;

    bool passed() const
    {
        return expected == computed;
    }
};

// Cumulative multiplicities m_λ(U_1), m_λ(U_2), m_λ(U_3).
Integer m_U1_closed(const Partition &lambda);
Integer m_U2_closed(const Partition &lambda);
Integer m_U3_closed(const Partition &lambda);

// dim W_3(λ_1, λ_2, λ_3).
Integer n_lambda(const Partition &lambda);
// The correction term subtracted in the (λ_1,λ_2,1,1) and (λ_1,λ_2,1) rows of
// m(U_3) − m(U_2); zero elsewhere.
Integer c_lambda(const Partition &lambda);

// m_λ(U_k) = d_{λ̄} dim W_k(λ_1,…,λ_k) when λ̄ = (λ_{k+1},…) has weight
// exactly k − 1. Throws std::invalid_argument otherwise.
Integer m_maximal_closed(const Partition &lambda, int k);

// Weight of (λ_{k+1}, λ_{k+2}, …).
int tail_weight(const Partition &lambda, int k);

// λ has at most 2k − 1 parts and tail_weight(λ, k) ≤ k − 1.
bool support_predicate(const Partition &lambda, int k);

// Expansion of the cumulative colength series cl(U_k; t), k ∈ [1, 4].
// Throws std::out_of_range for other k.
TruncatedSeries colength_closed(int k, int degree_bound);

// M'(U_2; V) − M'(U_1; V) = (v_2 + v_3) / ((1 − v_1)^2 (1 − v_2)) in three
// v-variables.
TruncatedSeries m_U2_difference_v_closed(int degree_bound);
// M'(U_3; V) − M'(U_2; V) as the rational function in five v-variables.
TruncatedSeries m_U3_difference_v_closed(int degree_bound);

} // namespace utcochar
