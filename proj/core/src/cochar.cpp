#include <utcochar/cochar.hpp>

#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace utcochar
{

namespace
{

void require_k(int k, const char *who)
{
    if (k < 1) {
        throw std::invalid_argument(std::string(who) + " requires k >= 1");
    }
}

// t_1 + ⋯ + t_d − 1.
TruncatedSeries shifted_variable_sum(std::size_t d, int degree_bound)
{
    TruncatedSeries s = TruncatedSeries::variable_sum(d, degree_bound);
    s += TruncatedSeries::constant(d, degree_bound, -1);
    return s;
}

// Y^1(T^λ), …, Y^k(T^λ); index j − 1 holds Y^j.
std::vector<MultiplicitySeries> young_chain(const Partition &lambda, std::size_t d, int degree_bound, int k)
{
    std::vector<MultiplicitySeries> out;
    out.reserve(static_cast<std::size_t>(k));
    MultiplicitySeries current = MultiplicitySeries::unit(lambda, d, degree_bound);
    for (int j = 1; j <= k; ++j) {
        current = young_derive(current);
        out.push_back(current);
    }
    return out;
}

} // namespace

TruncatedSeries hilbert_series_binomial(int k, std::size_t d, int degree_bound)
{
    require_k(k, "hilbert_series_binomial");
    const TruncatedSeries s = shifted_variable_sum(d, degree_bound);
    TruncatedSeries power = times_geometric(TruncatedSeries::constant(d, degree_bound, 1));
    TruncatedSeries total = power * Integer(k);
    for (int j = 2; j <= k; ++j) {
        power = times_geometric(power * s);
        total += power * binomial(k, j);
    }
    return total;
}

TruncatedSeries hilbert_series_telescoped(int k, std::size_t d, int degree_bound)
{
    require_k(k, "hilbert_series_telescoped");
    const TruncatedSeries one = TruncatedSeries::constant(d, degree_bound, 1);
    const TruncatedSeries s = shifted_variable_sum(d, degree_bound);
    const TruncatedSeries base = one + s * geometric_product(1, d, degree_bound);

    TruncatedSeries numerator = base;
    for (int j = 2; j <= k; ++j) {
        numerator = numerator * base;
    }
    numerator -= one;

    // 1 / (Σt − 1) = −Σ_m (Σt)^m.
    const TruncatedSeries sum = TruncatedSeries::variable_sum(d, degree_bound);
    TruncatedSeries inverse(d, degree_bound);
    TruncatedSeries power = one;
    for (int m = 0; m <= degree_bound; ++m) {
        inverse -= power;
        power = power * sum;
    }
    return numerator * inverse;
}

TruncatedSeries hilbert_series_Uk(int k, std::size_t d, int degree_bound)
{
    TruncatedSeries binomial_form = hilbert_series_binomial(k, d, degree_bound);
    if (binomial_form != hilbert_series_telescoped(k, d, degree_bound)) {
        throw std::logic_error("hilbert_series_Uk: closed forms disagree");
    }
    return binomial_form;
}

TruncatedSeries hook_sum(std::size_t d, int degree_bound)
{
    TruncatedSeries out(d, degree_bound);
    for (int n = 2; n <= degree_bound; ++n) {
        out += schur_polynomial(Partition{n - 1, 1}, d, degree_bound);
    }
    return out;
}

TruncatedSeries hilbert_series_proper_oracle(int k, std::size_t d, int degree_bound)
{
    require_k(k, "hilbert_series_proper_oracle");
    const TruncatedSeries hooks = hook_sum(d, degree_bound);
    TruncatedSeries power = TruncatedSeries::constant(d, degree_bound, 1);
    TruncatedSeries proper = power;
    for (int r = 1; r < k; ++r) {
        power = power * hooks;
        proper += power;
    }
    return proper * geometric_product(1, d, degree_bound);
}

bool formanek_recurrence_check(int k, std::size_t d, int degree_bound)
{
    if (k < 2) {
        throw std::invalid_argument("formanek_recurrence_check requires k >= 2");
    }
    const TruncatedSeries h1 = hilbert_series_Uk(1, d, degree_bound);
    const TruncatedSeries previous = hilbert_series_Uk(k - 1, d, degree_bound);
    const TruncatedSeries expected = h1 + previous + shifted_variable_sum(d, degree_bound) * (h1 * previous);
    return hilbert_series_Uk(k, d, degree_bound) == expected;
}

MultiplicitySeries multiplicity_series_Uk(int k, std::size_t d, int degree_bound)
{
    require_k(k, "multiplicity_series_Uk");

    // Every λ ⊢ q ≤ k − 1 that fits in d rows; Y^j(T^λ) is needed for j > q.
    std::vector<Partition> seeds;
    for (int q = 0; q < k; ++q) {
        for (auto &lambda : partitions_of(q, static_cast<int>(d))) {
            seeds.push_back(std::move(lambda));
        }
    }

    std::vector<std::future<std::vector<MultiplicitySeries>>> pending;
    pending.reserve(seeds.size());
    for (const auto &lambda : seeds) {
        pending.push_back(std::async(std::launch::async, young_chain, lambda, d, degree_bound, k));
    }
    std::map<Partition, std::vector<MultiplicitySeries>> chains;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        chains.emplace(seeds[i], pending[i].get());
    }

    TruncatedSeries total(d, degree_bound);
    for (int j = 1; j <= k; ++j) {
        for (int q = 0; q < j; ++q) {
            const Integer outer = binomial(k, j) * binomial(j - 1, q) * ((j - q - 1) % 2 == 0 ? 1 : -1);
            for (const auto &lambda : partitions_of(q, static_cast<int>(d))) {
                const auto &power = chains.at(lambda)[static_cast<std::size_t>(j - 1)];
                total += power.series() * (outer * standard_tableaux_count(lambda));
            }
        }
    }

    for (const auto &[e, c] : total.terms()) {
        if (c < 0) {
            throw std::logic_error("multiplicity_series_Uk: negative multiplicity at "
                                   + partition_of(e).to_string());
        }
    }
    return MultiplicitySeries(std::move(total), degree_bound);
}

MultiplicityTable to_table(int k, const MultiplicitySeries &series)
{
    return MultiplicityTable{k, series.var_count(), series.degree_bound(), series.effective_bound(),
                             series.entries()};
}

TruncatedSeries to_v_variables(const MultiplicitySeries &series)
{
    const std::size_t d = series.var_count();
    TruncatedSeries out(d, series.degree_bound());
    ExponentVector v(d);
    for (const auto &[e, c] : series.series().terms()) {
        for (std::size_t i = 0; i < d; ++i) {
            v.set(i, e[i] - (i + 1 < d ? e[i + 1] : 0));
        }
        out.add_term(v, c);
    }
    return out;
}

MultiplicitySeries from_v_variables(const TruncatedSeries &v_series, int degree_bound)
{
    const std::size_t d = v_series.var_count();
    TruncatedSeries out(d, degree_bound);
    std::vector<int> lambda(d);
    for (const auto &[v, c] : v_series.terms()) {
        int running = 0;
        int weight = 0;
        for (std::size_t i = d; i-- > 0;) {
            running += v[i];
            lambda[i] = running;
            weight += running;
        }
        if (weight > degree_bound) {
            continue;
        }
        out.add_term(ExponentVector::from(lambda), c);
    }
    return MultiplicitySeries(std::move(out), degree_bound);
}

TruncatedSeries colength_series(int k, int degree_bound)
{
    return evaluate_diagonal(multiplicity_series_Uk(k, complete_variable_count(k), degree_bound).series());
}

} // namespace utcochar
